#!/usr/bin/env python
"""
群胚对偶验证程序主入口
"""

import argparse
import json
import sys
from typing import Any, Dict, List

from pydantic import ValidationError
from rich.console import Console
from rich.panel import Panel
from rich.table import Table

try:
    import config
except ImportError:
    print("错误: 找不到配置文件。请复制 config.example.py 到 config.py。")
    sys.exit(2)

from groupoid_duality.errors import MalformedInputError
from groupoid_duality.log import setup_logging
from groupoid_duality.models.run_config import SUBCOMMANDS, RunConfig
from groupoid_duality.runner import run
from groupoid_duality.storage.json_storage import JsonStorage

console = Console(width=getattr(config, "MAX_OUTPUT_WIDTH", None))


def build_parser() -> argparse.ArgumentParser:
    """命令行参数，缺省值来自 config.py。"""
    parser = argparse.ArgumentParser(description="有限群胚与 Hopf 代数胚对偶的精确验证")
    parser.add_argument("subcommand", choices=SUBCOMMANDS, help="要执行的子命令")
    parser.add_argument("--input", "-i", action="append", default=[], help="群胚/表示/Hopf 代数胚文件，或 corpus:<名称>，可重复")
    parser.add_argument("--hopf", type=str, help="hom-check 使用的 Hopf 代数胚（也可以给群胚，取 ℛₖ）")
    parser.add_argument("--base-point", type=int, default=0, help="decompose 的基点编号")
    parser.add_argument("--field", type=str, default=getattr(config, "DEFAULT_FIELD", "rational"), help="rational 或 fp:<p>")
    parser.add_argument("--depth", type=int, default=getattr(config, "FAMILY_DEPTH", 2), help="生成族的张量闭包深度")
    parser.add_argument("--seed", type=int, default=getattr(config, "RANDOM_SEED", 0), help="抽样检查的随机种子")
    parser.add_argument("--output", "-o", choices=["text", "json"], default=getattr(config, "OUTPUT_FORMAT", "text"), help="报告格式")
    parser.add_argument("--guard", type=int, default=getattr(config, "ENUMERATION_GUARD", 10), help="态射枚举的箭头数上限")
    parser.add_argument("--save-report", type=str, help="把 JSON 报告保存到数据目录 reports/ 下的名称")
    return parser


def print_text(report: Dict[str, Any]) -> None:
    """用 rich 打印人读的报告。"""
    title = f"{report['subcommand']} ({report['field']})"
    if "error" in report:
        error = report["error"]
        console.print(Panel(f"{error['type']}: {error['message']}", title=title, border_style="red"))
        if "components" in error:
            console.print(f"[yellow]连通分支: {error['components']}[/yellow]")
        return

    rows: List[Dict[str, Any]] = [s["row"] for s in report["sections"] if "row" in s]
    if rows:
        table = Table(title=title)
        for column in ("groupoid", "theta_iso", "triangle_one", "triangle_two", "gt_check", "arrows", "total"):
            table.add_column(column)
        for row in rows:
            table.add_row(
                row["groupoid"],
                str(row["theta_iso"]),
                str(row["triangle_one"]),
                str(row["triangle_two"]),
                str(row["gt_check"]),
                str(row["dims"]["arrows"]),
                str(row["dims"]["total"]),
            )
        console.print(table)

    for section in report["sections"]:
        status = "[green]通过[/green]" if section["ok"] else "[red]失败[/red]"
        console.print(f"[blue]{section['input']}[/blue] {section['subject']}: {status}")
        for v in section["violations"]:
            color = "red" if v["severity"] == "error" else "yellow"
            console.print(f"  [{color}]{v['axiom']}[/{color}] 见证 {v['witness']} {v['message']}")
    summary = "全部检查通过" if report["ok"] else f"{len(report['failures'])} 项检查失败"
    console.print(Panel.fit(summary, border_style="green" if report["ok"] else "red"))


def main():
    """主函数"""
    args = build_parser().parse_args()
    setup_logging(getattr(config, "LOG_LEVEL", "WARNING"), getattr(config, "LOG_FILE", "") or None)

    try:
        run_config = RunConfig(
            subcommand=args.subcommand,
            inputs=args.input,
            hopf=args.hopf,
            base_point=args.base_point,
            field=args.field,
            depth=args.depth,
            max_rank=getattr(config, "CLOSURE_MAX_RANK", 16),
            seed=args.seed,
            samples=getattr(config, "RANDOM_SAMPLES", 100),
            output=args.output,
            guard=args.guard,
            max_dim=getattr(config, "BRUTE_FORCE_MAX_DIM", 12),
            max_prime=getattr(config, "BRUTE_FORCE_MAX_PRIME", 5),
            data_dir=getattr(config, "DATA_DIR", "data"),
            corpus_file=getattr(config, "CORPUS_FILE", "data/corpus.json"),
        )
    except ValidationError as e:
        console.print(f"[bold red]参数错误: {e}[/bold red]")
        sys.exit(MalformedInputError.exit_code)

    exit_code, report = run(run_config)

    if args.save_report:
        path = JsonStorage(run_config.data_dir).save(report, "reports", args.save_report)
        console.print(f"[green]报告已保存: {path}[/green]", highlight=False)
    if run_config.output == "json":
        print(json.dumps(report, ensure_ascii=False, indent=2))
    else:
        print_text(report)
    sys.exit(exit_code)


if __name__ == "__main__":
    main()
