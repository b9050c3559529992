"""
基域模块，定义有理数域和素域以及带域标签的精确标量。
域元素本身使用 sympy 的 QQ 与 GF(p) 定义域。
"""

import random
from fractions import Fraction
from typing import Any, Iterator, List, Tuple, Union

from sympy import isprime
from sympy.polys.domains import GF, QQ

from groupoid_duality.errors import DualityError, FieldMismatchError, MalformedInputError


class FieldSpec:
    """基域描述：有理数域，或素数模 p 的有限域。"""

    def __init__(self, kind: str = "rational", modulus: int = None):
        """
        初始化基域。

        Args:
            kind: "rational" 或 "prime"
            modulus: 素域的模，kind 为 "prime" 时必须给出且为素数

        Raises:
            MalformedInputError: 类型未知或模不是素数
        """
        if kind == "rational":
            self.kind = kind
            self.modulus = None
            self.domain = QQ
        elif kind == "prime":
            if not isinstance(modulus, int) or isinstance(modulus, bool) or not isprime(modulus):
                raise MalformedInputError(f"素域的模必须是素数，得到: {modulus!r}")
            self.kind = kind
            self.modulus = modulus
            self.domain = GF(modulus)
        else:
            raise MalformedInputError(f"未知的域类型: {kind!r}")

        self.zero = self.domain.zero
        self.one = self.domain.one

    @classmethod
    def rational(cls) -> "FieldSpec":
        return cls("rational")

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls("prime", p)

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """
        解析命令行与文件中的域描述。

        Args:
            text: "rational" 或 "fp:<p>"

        Returns:
            对应的 FieldSpec
        """
        text = text.strip().lower()
        if text in ("rational", "q", "qq"):
            return cls.rational()
        if text.startswith("fp:"):
            try:
                p = int(text[3:])
            except ValueError:
                raise MalformedInputError(f"无法解析素域描述: {text!r}")
            return cls.prime(p)
        raise MalformedInputError(f"无法解析域描述: {text!r}")

    @property
    def is_rational(self) -> bool:
        return self.kind == "rational"

    def __str__(self) -> str:
        return "rational" if self.is_rational else f"fp:{self.modulus}"

    def __repr__(self) -> str:
        return f"FieldSpec({str(self)!r})"

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, FieldSpec):
            return False
        return self.kind == other.kind and self.modulus == other.modulus

    def __hash__(self) -> int:
        return hash((self.kind, self.modulus))

    def check_same(self, other: "FieldSpec") -> None:
        """两个域不同则抛出 FieldMismatchError。"""
        if self != other:
            raise FieldMismatchError(f"基域不一致: {self} 与 {other}")

    # ---- 元素转换 ----

    def element(self, value: Any) -> Any:
        """
        把整数、分数、字符串或 Scalar 转换成本域的元素。

        Args:
            value: 待转换的值

        Returns:
            sympy 定义域中的元素
        """
        if isinstance(value, Scalar):
            self.check_same(value.field)
            return value.value
        if isinstance(value, str):
            return self.parse_scalar(value)
        if isinstance(value, bool):
            return self.one if value else self.zero
        if isinstance(value, int):
            return self.domain(value)
        if isinstance(value, Fraction):
            return self._fraction(value.numerator, value.denominator)
        if self.domain.of_type(value):
            return value
        return self.domain.convert(value)

    def _fraction(self, numerator: int, denominator: int) -> Any:
        if denominator == 0:
            raise MalformedInputError("分母为零")
        if self.is_rational:
            return QQ(numerator, denominator)
        if denominator % self.modulus == 0:
            raise MalformedInputError(f"分母 {denominator} 在 F_{self.modulus} 中不可逆")
        return self.domain(numerator) / self.domain(denominator)

    def parse_scalar(self, text: str) -> Any:
        """
        解析标量字符串："p/q"、"n" 或 "r mod p"。

        Args:
            text: 标量字符串

        Returns:
            本域中的元素
        """
        text = text.strip()
        try:
            if " mod " in text:
                residue, modulus = text.split(" mod ")
                if self.is_rational or int(modulus) != self.modulus:
                    raise FieldMismatchError(f"标量 {text!r} 不属于域 {self}")
                return self.domain(int(residue))
            if "/" in text:
                numerator, denominator = text.split("/")
                return self._fraction(int(numerator), int(denominator))
            return self.domain(int(text))
        except DualityError:
            raise
        except ValueError as e:
            raise MalformedInputError(f"无法解析标量 {text!r}: {e}")

    def format(self, value: Any) -> str:
        """把域元素序列化为字符串。"""
        if self.is_rational:
            numerator = int(QQ.numer(value))
            denominator = int(QQ.denom(value))
            if denominator == 1:
                return str(numerator)
            return f"{numerator}/{denominator}"
        return f"{int(value) % self.modulus} mod {self.modulus}"

    def key(self, value: Any) -> Union[int, Tuple[int, int]]:
        """域元素的可哈希规范形式，用于查表。"""
        if self.is_rational:
            return (int(QQ.numer(value)), int(QQ.denom(value)))
        return int(value) % self.modulus

    def elements(self) -> Iterator[Any]:
        """按 0, 1, ..., p-1 的顺序枚举素域元素。"""
        if self.is_rational:
            raise MalformedInputError("有理数域不可枚举")
        for residue in range(self.modulus):
            yield self.domain(residue)

    def random_element(self, rng: random.Random, nonzero: bool = False) -> Any:
        """按给定随机源生成一个小的随机元素。"""
        while True:
            if self.is_rational:
                value = QQ(rng.randint(-6, 6), rng.randint(1, 4))
            else:
                value = self.domain(rng.randrange(self.modulus))
            if not nonzero or value:
                return value

    def scalar(self, value: Any) -> "Scalar":
        return Scalar(self.element(value), self)

    def to_dict(self) -> str:
        return str(self)

    @classmethod
    def from_dict(cls, data: str) -> "FieldSpec":
        return cls.parse(data)


class Scalar:
    """带域标签的精确标量，不同域的标量不能混合运算。"""

    __slots__ = ("value", "field")

    def __init__(self, value: Any, field: FieldSpec):
        self.value = value
        self.field = field

    def _coerce(self, other: Any) -> Any:
        if isinstance(other, Scalar):
            self.field.check_same(other.field)
            return other.value
        if isinstance(other, (int, Fraction)):
            return self.field.element(other)
        raise FieldMismatchError(f"不能与 {type(other).__name__} 运算")

    def __add__(self, other: Any) -> "Scalar":
        return Scalar(self.value + self._coerce(other), self.field)

    __radd__ = __add__

    def __sub__(self, other: Any) -> "Scalar":
        return Scalar(self.value - self._coerce(other), self.field)

    def __rsub__(self, other: Any) -> "Scalar":
        return Scalar(self._coerce(other) - self.value, self.field)

    def __mul__(self, other: Any) -> "Scalar":
        return Scalar(self.value * self._coerce(other), self.field)

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> "Scalar":
        divisor = self._coerce(other)
        if not divisor:
            raise ZeroDivisionError("除以零")
        return Scalar(self.value / divisor, self.field)

    def __rtruediv__(self, other: Any) -> "Scalar":
        if not self.value:
            raise ZeroDivisionError("除以零")
        return Scalar(self._coerce(other) / self.value, self.field)

    def __neg__(self) -> "Scalar":
        return Scalar(-self.value, self.field)

    def __bool__(self) -> bool:
        return bool(self.value)

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, Fraction)):
            return self.value == self.field.element(other)
        return False

    def __hash__(self) -> int:
        return hash((self.field, self.field.key(self.value)))

    def __str__(self) -> str:
        return self.field.format(self.value)

    def __repr__(self) -> str:
        return f"Scalar({str(self)!r}, {self.field})"


def parse_scalars(values: List[Any], field: FieldSpec) -> List[Any]:
    """批量转换为域元素。"""
    return [field.element(v) for v in values]
