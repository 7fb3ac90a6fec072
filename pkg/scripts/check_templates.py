"""Check the CSM template identity on random joins and products and on the curve catalog.

    python3 scripts/check_templates.py --trials 200 --seed 3
"""

import argparse
import random
import time
from dataclasses import dataclass, fields

from splayed.catalog import CURVE_CATALOG
from splayed.chow import ChowClass, Pn, cap_fundamental
from splayed.csm import PlaneCurve, verify_template_curves, verify_template_join, verify_template_product


@dataclass
class TemplateConfig:
    trials: int = 100
    seed: int = 0
    max_join_dim: int = 5
    max_product_dim: int = 4
    bound: int = 10
    curves: bool = True


def parse_config(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for f in fields(TemplateConfig):
        flag = "--" + f.name.replace("_", "-")
        if f.type is bool or isinstance(f.default, bool):
            p.add_argument("--no-" + f.name.replace("_", "-"), dest=f.name, action="store_false")
        else:
            p.add_argument(flag, dest=f.name, type=int, default=f.default)
    return TemplateConfig(**vars(p.parse_args(argv)))


def random_joins(cfg, rng):
    failures = []
    for _ in range(cfg.trials):
        m, n = rng.randint(1, cfg.max_join_dim), rng.randint(1, cfg.max_join_dim)
        alpha = [rng.randint(-cfg.bound, cfg.bound) for _ in range(m)]
        beta = [rng.randint(-cfg.bound, cfg.bound) for _ in range(n)]
        if not verify_template_join(alpha, beta, m, n).holds:
            failures.append((alpha, beta, m, n))
    return failures


def random_products(cfg, rng):
    failures = []
    for _ in range(cfg.trials):
        a, b = rng.randint(1, cfg.max_product_dim), rng.randint(1, cfg.max_product_dim)
        c1 = [rng.randint(-cfg.bound, cfg.bound) for _ in range(a + 1)]
        c2 = [rng.randint(-cfg.bound, cfg.bound) for _ in range(b + 1)]
        v = verify_template_product(
            cap_fundamental(ChowClass.from_list(Pn(a), c1)),
            cap_fundamental(ChowClass.from_list(Pn(b), c2)),
        )
        if not v.holds:
            failures.append((c1, c2))
    return failures


def curve_table(cfg):
    rows = []
    for case in CURVE_CATALOG:
        f1, f2 = case.polys()
        v = verify_template_curves(PlaneCurve(f1), PlaneCurve(f2), seed=cfg.seed)
        d = v.details
        rows.append((case.name, d["splayed"], v.holds, d["distinct_points"], d["excess"]))
    return rows


def main(argv=None):
    cfg = parse_config(argv)
    rng = random.Random(cfg.seed)
    start = time.perf_counter()
    joins = random_joins(cfg, rng)
    products = random_products(cfg, rng)
    print(f"joins:    {cfg.trials - len(joins)}/{cfg.trials} hold")
    print(f"products: {cfg.trials - len(products)}/{cfg.trials} hold")
    for f in joins + products:
        print("  counterexample candidate:", f)
    if cfg.curves:
        print(f"{'curve pair':<32} {'splayed':>8} {'holds':>6} {'points':>7} {'excess':>7}")
        for name, splayed, holds, points, excess in curve_table(cfg):
            print(f"{name:<32} {str(splayed):>8} {str(holds):>6} {points:>7} {excess:>7}")
    print(f"done in {time.perf_counter() - start:.2f}s")
    return 1 if joins or products else 0


if __name__ == "__main__":
    raise SystemExit(main())
