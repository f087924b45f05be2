"""Serialization of analysis results to JSON documents and terminal text.

The JSON layout is versioned (schema_version "1") and deterministic: point
sets are sorted by canonical coordinates, bound labels appear in a fixed
order, and every number that can exceed float precision is emitted as a
decimal string.
"""

import json
from fractions import Fraction

from .bounds import bound_table
from .magnitude import ExpOf, digit_count, force_exact, int_digits
from .orbits import DynamicalInventory
from .projline import format_point, point_sort_key
from .ratmap import HomogPair, PlaceSet, ReductionProfile
from .verify import FAIL, VerificationReport

SCHEMA_VERSION = "1"

BOUND_ORDER = ("B", "C3", "C5", "L1", "L2", "L3", "L4",
               "CV", "T", "TPLA", "FPLA", "L", "Q")

# exact values longer than this are summarized by their digit count
_EXACT_DISPLAY_DIGITS = 40


def render_magnitude(m) -> dict:
    """JSON form of a bound value.

    Exact integers carry their decimal expansion; pure exponentials carry
    the exact exponent; anything else is pinned down by its digit count
    alone.  Digit counts are strings because they can exceed 2**53.
    """
    v = force_exact(m)
    if v is not None:
        return {"kind": "exact", "value": str(v), "digits": str(int_digits(v))}
    if isinstance(m, ExpOf):
        return {"kind": "exp", "ln": str(m.ln), "digits": str(digit_count(m))}
    return {"kind": "astronomical", "digits": str(digit_count(m))}


def format_magnitude(m) -> str:
    v = force_exact(m)
    if v is not None:
        d = int_digits(v)
        if d <= _EXACT_DISPLAY_DIGITS:
            return str(v)
        return f"~10^{d - 1} ({d} digits, exact)"
    if isinstance(m, ExpOf):
        return f"e^{m.ln} ({digit_count(m)} digits)"
    d = digit_count(m)
    return f"~10^{d - 1} ({d} digits)"


def bound_rows(d: int, s: int, which: str | None = None) -> list[str]:
    """Text rows for the bound table, one per label."""
    table = bound_table(d, s)
    labels = BOUND_ORDER if which is None else (which,)
    return [f"{label} = {format_magnitude(table[label])}" for label in labels]


def _point_list(points) -> list[str]:
    return [format_point(p) for p in sorted(points, key=point_sort_key)]


def verification_to_dict(r: VerificationReport) -> dict:
    return {
        "check": r.check_name,
        "status": r.status,
        "reason": r.reason,
        "witnesses": list(r.witnesses),
        "parameters": {k: v for k, v in r.parameters},
    }


def analysis_report(pair: HomogPair, profile: ReductionProfile,
                    places: PlaceSet, inventory: DynamicalInventory | None,
                    verifications=()) -> dict:
    """Assemble the full analysis document.

    ``inventory`` is None for maps of degree below 2, where only the static
    reduction data makes sense; the flag records why the rest is missing.
    """
    report = {
        "schema_version": SCHEMA_VERSION,
        "map": {
            "input": str(pair),
            "degree": pair.degree,
            "numerator": [str(c) for c in pair.a],
            "denominator": [str(c) for c in pair.b],
        },
        "resultant": str(profile.resultant),
        "bad_primes": list(profile.bad_primes),
        "S": ["inf"] + sorted(places.finite),
        "s": places.size,
    }
    if inventory is not None:
        inv = inventory
        cycle_strs = [[format_point(p) for p in cyc] for cyc in inv.cycles]
        per0 = set(inv.per0)
        targets = sorted(inv.tails_by_target, key=point_sort_key)
        report.update({
            "search": {
                "height": inv.search_height,
                "max_iters": inv.max_iters,
                "escape_height": inv.escape_height,
            },
            "counts": {
                "preper": len(inv.preper),
                "per": len(inv.per),
                "tail": len(inv.tail),
                "per0": len(inv.per0),
            },
            "preper": _point_list(inv.preper),
            "cycles": [
                {"points": pts, "length": len(pts), "critical": inv.cycles[i][0] in per0}
                for i, pts in enumerate(cycle_strs)
            ],
            "tails_by_target": {
                format_point(t): [format_point(q) for q in inv.tails_by_target[t]]
                for t in targets
            },
            "tail_lengths": {
                format_point(p): inv.tail_lengths[p]
                for p in sorted(inv.tail_lengths, key=point_sort_key)
            },
            "bounds": {
                label: render_magnitude(m)
                for label, m in bound_table(pair.degree, places.size).items()
            },
        })
    report["verifications"] = [verification_to_dict(r) for r in verifications]
    report["flags"] = {
        "degree_below_2": pair.degree_below_2,
        "incomplete": inventory.incomplete if inventory is not None else False,
        "undecided": _point_list(inventory.undecided) if inventory is not None else [],
    }
    return report


def report_json(report: dict) -> str:
    return json.dumps(report, indent=2) + "\n"


def _bound_text(rendered: dict) -> str:
    # mirror format_magnitude, working from the serialized form
    if rendered["kind"] == "exact":
        if len(rendered["value"]) <= _EXACT_DISPLAY_DIGITS:
            return rendered["value"]
        return f"~10^{int(rendered['digits']) - 1} ({rendered['digits']} digits, exact)"
    if rendered["kind"] == "exp":
        return f"e^{rendered['ln']} ({rendered['digits']} digits)"
    return f"~10^{int(rendered['digits']) - 1} ({rendered['digits']} digits)"


def analysis_text(report: dict) -> str:
    """Human-readable rendering of an analysis document."""
    lines = []
    m = report["map"]
    lines.append(f"map: {m['input']} (degree {m['degree']})")
    lines.append(f"resultant: {report['resultant']}")
    bad = ", ".join(str(p) for p in report["bad_primes"]) or "none"
    lines.append(f"bad primes: {bad}")
    s_str = ", ".join(str(x) for x in report["S"])
    lines.append(f"S = {{{s_str}}} (s = {report['s']})")
    if "counts" in report:
        c = report["counts"]
        search = report["search"]
        lines.append(f"preperiodic points found up to height {search['height']}: "
                     f"{c['preper']} ({c['per']} periodic, {c['tail']} tail, "
                     f"{c['per0']} on critical cycles)")
        for cyc in report["cycles"]:
            mark = ", critical" if cyc["critical"] else ""
            lines.append(f"  cycle: {' -> '.join(cyc['points'])} "
                         f"(period {cyc['length']}{mark})")
        listed = set()
        for cyc in report["cycles"]:
            rep = cyc["points"][0]
            tails = report["tails_by_target"].get(rep, [])
            if tails and rep not in listed:
                listed.add(rep)
                lines.append(f"  tails into cycle of {rep}: {', '.join(tails)}")
        lines.append(f"bounds (d = {m['degree']}, s = {report['s']}):")
        for label in BOUND_ORDER:
            lines.append(f"  {label} = {_bound_text(report['bounds'][label])}")
    flags = report["flags"]
    if flags["degree_below_2"]:
        lines.append("degree below 2: no dynamical analysis")
    if flags["incomplete"]:
        und = ", ".join(flags["undecided"])
        lines.append(f"incomplete: undecided starting points {und}")
    for v in report["verifications"]:
        lines.append(verification_line(v))
    return "\n".join(lines) + "\n"


def verification_line(v) -> str:
    """One-line (plus witnesses on failure) rendering of a check report."""
    if isinstance(v, VerificationReport):
        v = verification_to_dict(v)
    head = f"[{v['status']}] {v['check']}"
    notes = []
    if v["reason"]:
        notes.append(v["reason"])
    checked = v["parameters"].get("checked")
    if checked is not None:
        notes.append(f"checked {checked}")
    if notes:
        head += ": " + "; ".join(notes)
    if v["status"] == FAIL:
        head += "".join(f"\n    {w}" for w in v["witnesses"][:8])
    return head


def batch_rows_csv(rows: list[dict]) -> list[list[str]]:
    """Header plus one row per parameter value, all cells as strings."""
    header = ["c", "s", "bad_primes", "preper", "per", "tail", "per0",
              "incomplete", "count_le_Q"]
    out = [header]
    for r in rows:
        out.append([r["c"], str(r["s"]), ";".join(str(p) for p in r["bad_primes"]),
                    str(r["preper"]), str(r["per"]), str(r["tail"]), str(r["per0"]),
                    "yes" if r["incomplete"] else "no", r["count_le_Q"]])
    return out
