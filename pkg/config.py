"""
本地配置文件（由 config.example.py 复制而来）。
每一项都可以通过环境变量 GD_<名称> 覆盖（支持 .env 文件）。
"""

import os

from dotenv import load_dotenv

load_dotenv()


def _env(name: str, default):
    """读取 GD_ 前缀的环境变量并按默认值的类型转换。"""
    raw = os.environ.get(f"GD_{name}")
    if raw is None:
        return default
    if isinstance(default, bool):
        return raw.strip().lower() in ("1", "true", "yes")
    if isinstance(default, int):
        return int(raw)
    return raw


# ========================
# 计算配置
# ========================

# 基域: "rational" 或 "fp:<素数>"
DEFAULT_FIELD = _env("DEFAULT_FIELD", "rational")

# 余端模型的张量闭包深度
FAMILY_DEPTH = _env("FAMILY_DEPTH", 2)

# 加入张量闭包族的最大秩，更大的乘积经缠绕算子写回族中计算
CLOSURE_MAX_RANK = _env("CLOSURE_MAX_RANK", 16)

# 抽样检查的随机种子与样本数
RANDOM_SEED = _env("RANDOM_SEED", 0)
RANDOM_SAMPLES = _env("RANDOM_SAMPLES", 100)

# 群胚态射枚举的箭头数上限
ENUMERATION_GUARD = _env("ENUMERATION_GUARD", 10)

# 素域上特征标暴力搜索的上限
BRUTE_FORCE_MAX_DIM = _env("BRUTE_FORCE_MAX_DIM", 12)
BRUTE_FORCE_MAX_PRIME = _env("BRUTE_FORCE_MAX_PRIME", 5)

# ========================
# 输出配置
# ========================

OUTPUT_FORMAT = _env("OUTPUT_FORMAT", "text")   # "text" 或 "json"
MAX_OUTPUT_WIDTH = 100                           # 终端输出的最大宽度

# ========================
# 数据存储配置
# ========================

DATA_DIR = _env("DATA_DIR", "data")
CORPUS_FILE = _env("CORPUS_FILE", os.path.join("data", "corpus.json"))

# ========================
# 日志配置
# ========================

LOG_LEVEL = _env("LOG_LEVEL", "WARNING")   # DEBUG, INFO, WARNING, ERROR, CRITICAL
LOG_FILE = _env("LOG_FILE", "")            # 为空时只输出到终端
