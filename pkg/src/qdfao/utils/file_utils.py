# qdfao/utils/file_utils.py
from hashlib import sha256
from json import dump, load
from os import makedirs
from os.path import exists
from pathlib import Path
from typing import Literal


def is_dir(dir_local_path: str):
    return Path(dir_local_path).is_dir()


def check_is_dir(dir_local_path: str, err_msg: str | None = None):
    if not is_dir(dir_local_path):
        raise FileNotFoundError(err_msg if err_msg is not None else f"No such directory: '{dir_local_path}'")
    return dir_local_path


def make_dir(dir_local_path: str):
    if not exists(dir_local_path):
        makedirs(dir_local_path)
    else:
        check_is_dir(dir_local_path)
    return dir_local_path


def is_file(file_local_path: str):
    return Path(file_local_path).is_file()


def check_is_file(file_local_path: str, err_msg: str | None = None):
    if not is_file(file_local_path):
        raise FileNotFoundError(err_msg if err_msg is not None else f"No such file: '{file_local_path}'")
    return file_local_path


def read_text_file(file_path: str) -> str:
    check_is_file(file_path)
    with open(file_path, encoding="utf-8") as file:
        return file.read()


def write_file(destination_file_path: str, content, mode: Literal["b", "t"] = "t"):
    """
    :param destination_file_path: the path of the file (parent directories are created)
    :param mode: use 'b' for binary mode, 't' for text mode (default)
    """
    parent = Path(destination_file_path).parent
    if str(parent) not in ("", "."):
        make_dir(str(parent))
    if mode == "b":
        with open(destination_file_path, "wb") as file:
            file.write(content)
    else:
        with open(destination_file_path, "w", encoding="utf-8", newline="\n") as file:
            file.write(content)


def read_json_file(file_path):
    check_is_file(file_path)
    with open(file_path, encoding="utf-8") as json_file_content:
        return load(json_file_content)


def write_json_file(destination_file_path: str, json_dict):
    with open(destination_file_path, "w", encoding="utf-8") as file:
        dump(json_dict, file, ensure_ascii=False, indent=2, sort_keys=True)


def text_hash(content: str) -> str:
    return sha256(content.encode("utf-8")).hexdigest()
