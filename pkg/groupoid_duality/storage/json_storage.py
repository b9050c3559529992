"""
JSON文件存储模块，提供基于文件系统的JSON数据存储功能。
"""

import json
import os
import re
from typing import Any, Dict, List

from groupoid_duality.errors import MalformedInputError
from groupoid_duality.log import get_logger

logger = get_logger(__name__)

CATEGORIES = ["groupoids", "representations", "hopf", "reports"]


def safe_id(id: str) -> str:
    """把群胚名称之类的标识转换成可用作文件名的字符串。"""
    return re.sub(r"[^\w.\-()+,]", "_", id) or "unnamed"


class JsonStorage:
    """JSON文件存储类，用于保存和加载数据到JSON文件。"""

    def __init__(self, base_dir: str = "./data"):
        """
        初始化JSON存储对象。

        Args:
            base_dir: 数据存储的基础目录
        """
        self.base_dir = base_dir
        os.makedirs(base_dir, exist_ok=True)

        # 创建子目录
        for category in CATEGORIES:
            os.makedirs(os.path.join(base_dir, category), exist_ok=True)

    def path(self, category: str, id: str) -> str:
        return os.path.join(self.base_dir, category, f"{safe_id(id)}.json")

    def save(self, data: Dict[str, Any], category: str, id: str) -> str:
        """
        保存数据到JSON文件。键按写入顺序保留，相同数据总是得到相同的文件内容。

        Args:
            data: 要保存的数据字典
            category: 数据类别（groupoids, representations, hopf, reports）
            id: 数据ID

        Returns:
            保存的文件路径
        """
        dir_path = os.path.join(self.base_dir, category)
        os.makedirs(dir_path, exist_ok=True)

        file_path = self.path(category, id)
        with open(file_path, "w", encoding="utf-8") as f:
            json.dump(data, f, ensure_ascii=False, indent=2)
            f.write("\n")

        logger.debug("已保存 %s", file_path)
        return file_path

    def load(self, category: str, id: str) -> Dict[str, Any]:
        """
        从JSON文件加载数据。

        Args:
            category: 数据类别（groupoids, representations, hopf, reports）
            id: 数据ID

        Returns:
            加载的数据字典

        Raises:
            FileNotFoundError: 如果文件不存在
            MalformedInputError: 文件不是合法的JSON
        """
        file_path = self.path(category, id)

        if not os.path.exists(file_path):
            raise FileNotFoundError(f"找不到数据: {category}/{id}")

        return load_json_file(file_path)

    def delete(self, category: str, id: str) -> bool:
        """
        删除JSON文件。

        Returns:
            是否成功删除
        """
        file_path = self.path(category, id)

        if os.path.exists(file_path):
            os.remove(file_path)
            return True

        return False

    def list(self, category: str) -> List[Dict[str, Any]]:
        """
        列出指定类别的所有数据。

        Args:
            category: 数据类别

        Returns:
            数据项列表（每项包含id和名称），按id排序
        """
        dir_path = os.path.join(self.base_dir, category)
        result = []

        if not os.path.exists(dir_path):
            return result

        for filename in sorted(os.listdir(dir_path)):
            if filename.endswith(".json"):
                file_path = os.path.join(dir_path, filename)
                try:
                    data = load_json_file(file_path)
                    result.append({"id": filename[:-5], "name": data.get("name", "未命名")})
                except MalformedInputError as e:
                    logger.warning("读取文件 %s 时出错: %s", file_path, e)

        return result


def load_json_file(file_path: str) -> Dict[str, Any]:
    """
    读取一个JSON文件。

    Raises:
        FileNotFoundError: 文件不存在
        MalformedInputError: 内容不是合法的JSON
    """
    with open(file_path, "r", encoding="utf-8") as f:
        try:
            return json.load(f)
        except json.JSONDecodeError as e:
            raise MalformedInputError(f"{file_path} 不是合法的JSON: {e}")
