# qdfao/conf/env_keys.py
QDFAO_SOLVER = "QDFAO_SOLVER"
QDFAO_SOLVER_PATH = "QDFAO_SOLVER_PATH"
QDFAO_SOLVER_TIMEOUT = "QDFAO_SOLVER_TIMEOUT"
QDFAO_WORK_DIR = "QDFAO_WORK_DIR"
QDFAO_STATE_CAP = "QDFAO_STATE_CAP"
QDFAO_LOG = "QDFAO_LOG"
