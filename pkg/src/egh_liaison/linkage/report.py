"""Line-oriented reports for link chains and pipeline runs.

A report is an ordered list of ``(key, value)`` pairs.  ``records`` renders
them as ``key=value`` lines (stable keys, for machines and tests); ``table``
renders the same data for people.
"""

from __future__ import annotations

from ..combinat import liaison_hf
from ..polyalg import Ideal
from .links import LinkChain
from .pipeline import EGHResult


def _flag(v: bool) -> str:
    return "true" if v else "false"


def _hf_text(I: Ideal, degree_bound: int | None) -> str:
    if I.is_artinian() or I.is_unit():
        return str(I.hilbert_function())
    if degree_bound is None:
        return "non-artinian"
    return str(I.hilbert_function(degree_bound)) + "..."


def chain_pairs(chain: LinkChain, degree_bound: int | None = None) -> list:
    pairs = [("steps", str(len(chain)))]
    counts = chain.generator_counts
    for i, step in enumerate(chain.steps, start=1):
        pre = f"step.{i}."
        pairs += [
            (pre + "type", str(step.link_type)),
            (pre + "minimal", _flag(step.minimal)),
            (pre + "gens_source", str(counts[i - 1]) if counts else "?"),
            (pre + "gens_link", str(len(step.link_type))),
            (pre + "gens_target", str(counts[i]) if counts else "?"),
            (pre + "hf_source", _hf_text(step.source, degree_bound)),
            (pre + "hf_link", _hf_text(step.link, degree_bound)),
            (pre + "hf_target", _hf_text(step.target, degree_bound)),
            (pre + "link_verified", "true"),
        ]
        if step.source.is_artinian():
            predicted = liaison_hf(step.link.hilbert_function(), step.source.hilbert_function())
            pairs.append((pre + "hf_formula", _flag(predicted == step.target.hilbert_function())))
    types = chain.types()
    violation = chain.first_violation()
    pairs += [
        ("terminal_type", str(chain.terminal_type)),
        ("type_chain", ";".join(",".join(map(str, t)) for t in types)),
        ("generator_counts", ",".join(map(str, counts))),
        ("sequentially_bounded", _flag(violation is None)),
    ]
    if violation is not None:
        pairs.append(("first_violation", str(violation)))
    return pairs


def egh_pairs(result: EGHResult) -> list:
    pairs = [("e", str(result.e))]
    pairs += chain_pairs(result.chain)
    pairs += [
        ("witness", str(result.witness) if result.witness is not None else "none"),
        ("hf_ideal", str(result.hf_ideal)),
        ("hf_witness", str(result.hf_witness) if result.hf_witness is not None else "none"),
    ]
    pairs += [(f"check.{k}", _flag(v)) for k, v in result.checks.items()]
    pairs.append(("verdict", "PASS" if result.passed else "FAIL"))
    return pairs


def render(pairs: list, fmt: str = "records") -> str:
    if fmt == "records":
        return "".join(f"{k}={v}\n" for k, v in pairs)
    if fmt != "table":
        raise ValueError(f"unknown format {fmt!r}")
    scalars = [(k, v) for k, v in pairs if not k.startswith("step.")]
    steps: dict = {}
    columns: list = []
    for k, v in pairs:
        if k.startswith("step."):
            _, idx, col = k.split(".", 2)
            steps.setdefault(int(idx), {})[col] = v
            if col not in columns:
                columns.append(col)
    width = max((len(k) for k, _ in scalars), default=0)
    lines = [f"{k.ljust(width)}  {v}" for k, v in scalars]
    if steps:
        header = ["step"] + columns
        rows = [[str(i)] + [steps[i].get(c, "") for c in columns] for i in sorted(steps)]
        widths = [max(len(r[c]) for r in [header] + rows) for c in range(len(header))]
        lines.append("")
        for r in [header] + rows:
            lines.append("  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip())
    return "\n".join(lines) + "\n"
