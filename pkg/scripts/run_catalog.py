"""Analyze every pair in the germ catalog and compare with the truncated-series oracle.

    python3 scripts/run_catalog.py --oracle --out catalog.json
"""

import argparse
import json
import time
from dataclasses import asdict, dataclass, fields

from splayed.catalog import PAIR_CATALOG
from splayed.germs import analyze_pair, milnor_number
from splayed.groebner import INFINITE
from splayed.oracle import certified_splayedness_dimension
from splayed.report import encode


@dataclass
class CatalogConfig:
    oracle: bool = False
    start_degree: int = 10
    freeness: bool = False
    category: str = None
    out: str = None


def parse_config(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--oracle", action="store_true", help="cross-check isolated pairs with the oracle")
    p.add_argument("--start-degree", type=int, default=CatalogConfig.start_degree)
    p.add_argument("--freeness", action="store_true", help="also run the Saito freeness test")
    p.add_argument("--category", help="only pairs of this category")
    p.add_argument("--out", help="write the rows as JSON")
    args = p.parse_args(argv)
    return CatalogConfig(**{f.name: getattr(args, f.name) for f in fields(CatalogConfig)})


def analyze(case, cfg):
    g, h = case.polys()
    start = time.perf_counter()
    r = analyze_pair(g, h, freeness=cfg.freeness)
    row = {
        "name": case.name,
        "category": case.category,
        "splayed": r.leibniz_verdict,
        "der_span": r.der_span_verdict,
        "spla_dimension": r.spla_dimension,
        "strict_dimension": r.strict_dimension,
        "euler_homog_gh": r.euler_homog_gh,
    }
    if cfg.freeness:
        row["free_gh"] = r.free_gh
    if cfg.oracle and milnor_number(g * h) != INFINITE:
        value, degree = certified_splayedness_dimension(g, h, start=cfg.start_degree)
        row["oracle"] = value
        row["oracle_degree"] = degree
        row["oracle_agrees"] = value == r.spla_dimension
    row["seconds"] = round(time.perf_counter() - start, 3)
    return row


def main(argv=None):
    cfg = parse_config(argv)
    cases = [c for c in PAIR_CATALOG if cfg.category in (None, c.category)]
    rows = [analyze(c, cfg) for c in cases]
    cols = [k for k in rows[0] if k != "category"] if rows else []
    print("  ".join(f"{c:>14}" if c != "name" else f"{c:<24}" for c in cols))
    for row in rows:
        cells = []
        for c in cols:
            v = row.get(c, "")
            v = "inf" if v == INFINITE else v
            cells.append(f"{str(v):<24}" if c == "name" else f"{str(v):>14}")
        print("  ".join(cells))
    bad = [r["name"] for r in rows if r.get("oracle_agrees") is False]
    print(f"{len(rows)} pairs, {sum(r['splayed'] for r in rows)} splayed, oracle disagreements: {bad or 'none'}")
    if cfg.out:
        with open(cfg.out, "w") as fh:
            json.dump({"config": asdict(cfg), "rows": encode(rows)}, fh, indent=2, sort_keys=True)
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
