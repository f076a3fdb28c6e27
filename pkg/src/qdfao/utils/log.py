# qdfao/utils/log.py
import sys
from datetime import datetime

from qdfao.utils.str_utils import enforce_length

SHOULD_LOG = False
HERE_LEN = 15


def _now() -> str:
    return datetime.now().strftime("%Y-%m-%d %H:%M:%S")


def set_log_enabled(flag: bool) -> None:
    global SHOULD_LOG
    SHOULD_LOG = bool(flag)


def is_log_enabled() -> bool:
    return SHOULD_LOG


def log(*args, **kwargs):  # pragma: no cover
    if not SHOULD_LOG:
        return
    out = kwargs.get("file", sys.stderr)
    if len(args) < 2:
        print(f"D {_now()}", file=out)
        return
    start_line = f"{args[0]} {_now()} [{enforce_length(args[1], HERE_LEN)}]"
    if len(args) == 2:
        print(f"{start_line} <", file=out)
        return
    if len(args) == 3:
        print(f"{start_line} {args[2]}", file=out)
        return
    print(f"{start_line} {args[2]}:", *args[3:], file=out)


def log_e(*args, **kwargs):  # pragma: no cover
    log("E", *args, **kwargs)


def log_w(*args, **kwargs):  # pragma: no cover
    log("W", *args, **kwargs)


def log_i(*args, **kwargs):  # pragma: no cover
    log("I", *args, **kwargs)


def log_d(*args, **kwargs):  # pragma: no cover
    log("D", *args, **kwargs)


def log_d_if(should_print: bool, *args, **kwargs):  # pragma: no cover
    if should_print:
        log_d(*args, **kwargs)


if __name__ == "__main__":  # pragma: no cover
    set_log_enabled(True)
    log_d()
    log_d("Test log")
    log_d("log", "states", 8)
