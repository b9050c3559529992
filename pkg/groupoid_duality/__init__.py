"""
有限群胚的表示范畴、表示函数 Hopf 代数胚与特征标群胚。
在精确域上构造并机器验证群胚与几何传递 Hopf 代数胚之间的对偶。
"""

__version__ = "0.1.0"
