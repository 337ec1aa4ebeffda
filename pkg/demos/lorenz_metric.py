"""Build a metric in which the Lorenz splitting is visible at time zero.

In the Euclidean metric the Lorenz flow contracts its stable direction and
expands center areas only after a transient (the fitted constant K exceeds
one).  The staged construction averages the cocycle along orbits and returns
a Gram field in which every inequality already holds with K = 1.

This takes roughly five minutes.  Run with ``python3 demos/lorenz_metric.py``.
"""
import time

from adaptmetric.construction import build_singular_adapted_metric
from adaptmetric.metric import PipelineConfig
from adaptmetric.models import get_model
from adaptmetric.splitting import certify_singular_hyperbolic


def main():
    cfg = PipelineConfig()
    start = time.perf_counter()
    splittings = get_model("lorenz_classic").splittings(warmup=cfg.warmup, seed=cfg.seed)
    before = certify_singular_hyperbolic(splittings, "Es", "Ec")
    print("Euclidean metric, free constant:")
    for name, part in before.parts.items():
        print(f"  {name:<12} rate {part.rate:8.4f}   K {part.constant:.3f}")

    result = build_singular_adapted_metric(splittings, cfg)
    for stage in result.stages:
        print(f"stage {stage.name:<28} {'pass' if stage.verdict else 'fail'}")
    cert = result.certificate
    print(f"adapted metric, K fixed at 1: {'pass' if cert else 'fail'}, rate {cert.rate:.4f}")
    for name, part in cert.parts.items():
        print(f"  {name:<12} rate {part.rate:8.4f}")
    print(f"{len(result.metrics)} Gram fields built in {time.perf_counter() - start:.0f} s")


if __name__ == "__main__":
    main()
