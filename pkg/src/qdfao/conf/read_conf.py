# qdfao/conf/read_conf.py
from __future__ import annotations

import os
from configparser import ConfigParser
from dataclasses import dataclass
from typing import Any

from qdfao.conf.env_keys import (
    QDFAO_LOG,
    QDFAO_SOLVER,
    QDFAO_SOLVER_PATH,
    QDFAO_SOLVER_TIMEOUT,
    QDFAO_STATE_CAP,
    QDFAO_WORK_DIR,
)
from qdfao.utils.conf_utils import parse_bool, read_ini_conf
from qdfao.utils.file_utils import is_file
from qdfao.utils.log import log_d, log_w

DEFAULT_SOLVER = "cadical153"
DEFAULT_WORK_DIR = "./.qdfao"
DEFAULT_STATE_CAP = 1_000_000


@dataclass
class SolverInformation:
    name: str
    path: str | None = None
    timeout: int | None = None

    @property
    def is_external(self) -> bool:
        return bool(self.path)

    @property
    def label(self) -> str:
        return self.path if self.path else self.name


class Settings:
    def __init__(self, ini_file: str | None = None):
        here = "conf.init"
        self._conf: ConfigParser | None = None
        self._section = "qdfao"
        if ini_file and is_file(ini_file):
            self._conf = read_ini_conf(ini_file)
            if not self._conf.has_section(self._section):
                log_w(here, "No [qdfao] section in", ini_file)
                self._conf = None

        _timeout = self.get_setting(env=QDFAO_SOLVER_TIMEOUT, param="solver_timeout")
        self.solver = SolverInformation(
            name=self.get_setting(env=QDFAO_SOLVER, param="solver", default=DEFAULT_SOLVER),
            path=self.get_setting(env=QDFAO_SOLVER_PATH, param="solver_path"),
            timeout=int(_timeout) if _timeout else None,
        )
        self.work_dir: str = self.get_setting(env=QDFAO_WORK_DIR, param="work_dir", default=DEFAULT_WORK_DIR)
        _cap = self.get_setting(env=QDFAO_STATE_CAP, param="state_cap")
        self.state_cap: int = int(_cap) if _cap else DEFAULT_STATE_CAP
        if self.state_cap < 1:
            raise RuntimeError(f"state_cap must be positive, got {self.state_cap}")
        self.log_enabled: bool = parse_bool(self.get_setting(env=QDFAO_LOG, param="log", default="false"))
        log_d(here, "solver", self.solver.label)

    def get_setting(
        self,
        *,
        env: str | None = None,
        param: str | None = None,
        default: Any | None = None,
    ):
        """
        Retrieve a setting from an environment variable or, alternatively, an ini file.
        If both are set, values from ENV are preferred.
        """
        here = "settings"
        if env:
            env_val = os.getenv(env.upper())
            if env_val is not None and env_val != "":
                return env_val
        if self._conf and param:
            conf_val = self._conf.get(self._section, param.lower(), fallback=None)
            if conf_val:
                log_d(here, "Extracted from conf file:", param)
                return conf_val
        return default


def get_conf(ini_file: str = "./.conf/config.ini"):
    return Settings(ini_file=ini_file)


if __name__ == "__main__":  # pragma: no cover
    conf = get_conf("./.conf/config.ini")
    print("[conf]", "solver:", conf.solver.label, "work_dir:", conf.work_dir)
