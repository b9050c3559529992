"""
批处理运行器：解析输入、执行子命令、汇总成确定性的报告字典。

退出码：0 全部通过；1 有检查失败；2 输入格式错误；3 超出枚举上限；
4 无法计算特征标；5 其他库错误。
"""

import os
from typing import Any, Callable, Dict, List, Optional, Tuple

from tqdm import tqdm

from groupoid_duality.duality import duality_bijection_check, round_trip
from groupoid_duality.errors import DualityError, MalformedInputError, NonTransitiveError, RankMismatchError
from groupoid_duality.log import get_logger
from groupoid_duality.models.groupoid import FiniteGroupoid
from groupoid_duality.models.hopf import HopfAlgebroid
from groupoid_duality.models.report import CheckReport
from groupoid_duality.models.representation import Representation
from groupoid_duality.models.run_config import RunConfig
from groupoid_duality.repfun import (
    build_repfun,
    isotropy_hopf_algebra,
    isotropy_quotient,
    repfun_concrete,
    transitive_decomposition_iso,
)
from groupoid_duality.storage.json_storage import JsonStorage, load_json_file
from groupoid_duality.tools.groupoid_tools import connected_components, load_corpus, validate_groupoid
from groupoid_duality.tools.hopf_tools import build_character_groupoid, check_hopf_axioms
from groupoid_duality.tools.representation_tools import end_unit_dimension, validate_rep

logger = get_logger(__name__)

Loaded = Tuple[str, Any]


class InputResolver:
    """
    把命令行输入解析成群胚、表示或 Hopf 代数胚。

    输入可以是文件路径、数据目录中的名称，或 corpus:<名称>。
    """

    def __init__(self, config: RunConfig):
        self.config = config
        self.storage = JsonStorage(config.data_dir)
        self._corpus: Optional[Dict[str, FiniteGroupoid]] = None

    @property
    def corpus(self) -> Dict[str, FiniteGroupoid]:
        if self._corpus is None:
            self._corpus = dict(load_corpus(self.config.corpus_file, self.storage))
        return self._corpus

    def _resolve_groupoid(self, ref: str) -> FiniteGroupoid:
        if os.path.isfile(ref):
            return FiniteGroupoid.from_dict(load_json_file(ref))
        return FiniteGroupoid.from_dict(self.storage.load("groupoids", ref))

    def load(self, ref: str) -> Loaded:
        """
        读取一个输入。

        Returns:
            (类别, 对象)，类别为 groupoid、representation 或 hopf

        Raises:
            MalformedInputError: 无法识别的输入
        """
        if ref.startswith("corpus:"):
            name = ref[len("corpus:"):]
            if name not in self.corpus:
                raise MalformedInputError(f"语料中没有 {name!r}，可选: {', '.join(self.corpus)}")
            return "groupoid", self.corpus[name]
        if os.path.isfile(ref):
            data = load_json_file(ref)
        else:
            data = None
            for category in ("groupoids", "representations", "hopf"):
                try:
                    data = self.storage.load(category, ref)
                    break
                except FileNotFoundError:
                    continue
            if data is None:
                raise MalformedInputError(f"找不到输入 {ref!r}")
        if not isinstance(data, dict):
            raise MalformedInputError(f"{ref} 的顶层必须是对象")
        if "matrices" in data:
            return "representation", Representation.from_dict(data, self._resolve_groupoid)
        if "comultiplication" in data:
            return "hopf", HopfAlgebroid.from_dict(data)
        if "arrows" in data:
            return "groupoid", FiniteGroupoid.from_dict(data)
        raise MalformedInputError(f"无法识别 {ref} 的格式")

    def groupoid(self, ref: str) -> FiniteGroupoid:
        kind, value = self.load(ref)
        if kind != "groupoid":
            raise MalformedInputError(f"{ref} 不是群胚文件")
        return value

    def hopf(self, ref: str) -> HopfAlgebroid:
        """Hopf 代数胚文件，或者群胚（取 ℛₖ）。"""
        kind, value = self.load(ref)
        if kind == "hopf":
            return value
        if kind == "groupoid":
            return repfun_concrete(value, self.config.field_spec)
        raise MalformedInputError(f"{ref} 不是 Hopf 代数胚或群胚")


def _section(name: str, report: CheckReport, **extra: Any) -> Dict[str, Any]:
    section = {"input": name}
    section.update(report.to_dict())
    section.update(extra)
    return section


# ========================
# 子命令
# ========================

def _validate(config: RunConfig, inputs: InputResolver) -> List[Dict[str, Any]]:
    sections = []
    for ref in config.inputs:
        kind, value = inputs.load(ref)
        if kind == "groupoid":
            report = validate_groupoid(value)
        elif kind == "representation":
            report = validate_rep(value)
        else:
            report = check_hopf_axioms(value)
        sections.append(_section(ref, report, kind=kind))
    return sections


def _components(config: RunConfig, inputs: InputResolver) -> List[Dict[str, Any]]:
    sections = []
    for ref in config.inputs:
        g = inputs.groupoid(ref)
        partition, _ = connected_components(g)
        report = end_unit_dimension(g, config.field_spec)
        report.subject = f"components {g.name}"
        sections.append(_section(
            ref,
            report,
            components=[[g.object_names[x] for x in block] for block in partition],
            transitive=len(partition) == 1,
        ))
    return sections


def _repfun(config: RunConfig, inputs: InputResolver) -> List[Dict[str, Any]]:
    sections = []
    for ref in config.inputs:
        g = inputs.groupoid(ref)
        repfun, report = build_repfun(
            g, config.field_spec, config.depth, config.max_rank, config.seed, config.samples
        )
        sections.append(_section(ref, report, hopf=repfun.concrete.to_dict()))
    return sections


def _characters(config: RunConfig, inputs: InputResolver) -> List[Dict[str, Any]]:
    sections = []
    for ref in config.inputs:
        h = inputs.hopf(ref)
        chars = build_character_groupoid(h, config.max_dim, config.max_prime)
        report = validate_groupoid(chars.groupoid)
        sections.append(_section(ref, report, character_groupoid=chars.groupoid.to_dict()))
    return sections


def _round_trip(config: RunConfig, inputs: InputResolver) -> List[Dict[str, Any]]:
    sections = []
    for ref in config.inputs:
        g = inputs.groupoid(ref)
        row, report = round_trip(g, config.field_spec)
        sections.append(_section(ref, report, row=row))
    return sections


def _hom_check(config: RunConfig, inputs: InputResolver) -> List[Dict[str, Any]]:
    if not config.hopf:
        raise MalformedInputError("hom-check 需要 --hopf 指定 Hopf 代数胚")
    h = inputs.hopf(config.hopf)
    sections = []
    for ref in config.inputs:
        g = inputs.groupoid(ref)
        report = duality_bijection_check(h, g, config.guard)
        sections.append(_section(ref, report))
    return sections


def _decompose(config: RunConfig, inputs: InputResolver) -> List[Dict[str, Any]]:
    field = config.field_spec
    sections = []
    for ref in config.inputs:
        g = inputs.groupoid(ref)
        if config.base_point >= g.n_objects:
            raise MalformedInputError(f"基点 {config.base_point} 超出 {g.name} 的对象数 {g.n_objects}")
        _, report = transitive_decomposition_iso(g, config.base_point, field)
        _, _, quotient = isotropy_quotient(g, field)
        report.merge(quotient, "isotropy_quotient.")
        for x in g.objects:
            _, block = isotropy_hopf_algebra(g, x, field)
            report.merge(block, f"isotropy[{g.object_names[x]}].")
        sections.append(_section(ref, report))
    return sections


def _corpus(config: RunConfig, inputs: InputResolver) -> List[Dict[str, Any]]:
    sections = []
    for name, g in tqdm(list(inputs.corpus.items()), desc="corpus", disable=None):
        row, report = round_trip(g, config.field_spec)
        sections.append(_section(f"corpus:{name}", report, row=row))
    return sections


SUBCOMMAND_HANDLERS: Dict[str, Callable[[RunConfig, InputResolver], List[Dict[str, Any]]]] = {
    "validate": _validate,
    "components": _components,
    "repfun": _repfun,
    "characters": _characters,
    "round-trip": _round_trip,
    "hom-check": _hom_check,
    "decompose": _decompose,
    "corpus": _corpus,
}


def _error_section(e: Exception) -> Dict[str, Any]:
    error: Dict[str, Any] = {"type": type(e).__name__, "message": str(e)}
    if isinstance(e, NonTransitiveError):
        error["components"] = e.components
    if isinstance(e, RankMismatchError):
        error["ranks"] = {str(k): v for k, v in e.ranks.items()}
    return error


def run(config: RunConfig) -> Tuple[int, Dict[str, Any]]:
    """
    执行一个子命令。

    Args:
        config: 运行配置

    Returns:
        (退出码, 报告字典)；相同配置与输入得到相同的报告
    """
    report: Dict[str, Any] = {
        "subcommand": config.subcommand,
        "field": config.field,
        "inputs": list(config.inputs),
        "depth": config.depth,
        "seed": config.seed,
    }
    try:
        if config.subcommand != "corpus" and not config.inputs:
            raise MalformedInputError(f"{config.subcommand} 至少需要一个 --input")
        sections = SUBCOMMAND_HANDLERS[config.subcommand](config, InputResolver(config))
    except DualityError as e:
        logger.error("%s", e)
        report.update({"ok": False, "error": _error_section(e)})
        return e.exit_code, report
    except FileNotFoundError as e:
        logger.error("%s", e)
        report.update({"ok": False, "error": _error_section(e)})
        return MalformedInputError.exit_code, report

    failures = [
        {"input": s["input"], "subject": s["subject"], **v}
        for s in sections
        for v in s["violations"]
        if v["severity"] == "error"
    ]
    ok = not failures
    report.update({"ok": ok, "sections": sections, "failures": failures})
    return (0 if ok else 1), report
