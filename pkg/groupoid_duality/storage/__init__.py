"""
存储模块，负责群胚、表示、Hopf 代数胚和报告文件的读写。
"""

from groupoid_duality.storage.json_storage import JsonStorage

__all__ = ["JsonStorage"]
