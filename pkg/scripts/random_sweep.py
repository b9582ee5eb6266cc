"""Random sweep over the main constructions.

For each sampled WFA: build the Nerode and derivative automata under a
state budget, record completion and sizes, and cross-check every
completed construction against the source on all words up to a length.
Also tallies the rank test against per-system solving on random
vector-state automata.

    python scripts/random_sweep.py --instances 200 --seed 1
"""
import argparse
import random
import time
from collections import Counter
from dataclasses import asdict, dataclass

from realwa.derivative import derivative_automaton
from realwa.generate import finite_orbit_wfa, random_linear_wavs, random_wavs, random_wfa
from realwa.nerode import nerode
from realwa.oracle import complete_equiv_bounded, language_equiv_bounded, linear_by_systems
from realwa.wavs import linearity_check


@dataclass
class SweepConfig:
    instances: int = 100
    seed: int = 0
    max_states: int = 2000
    check_len: int = 6
    finite_orbit_share: float = 0.5
    wavs_instances: int = 200


def sweep(cfg: SweepConfig) -> dict:
    rng = random.Random(cfg.seed)
    tally = Counter()
    gaps = Counter()
    for _ in range(cfg.instances):
        a = finite_orbit_wfa(rng) if rng.random() < cfg.finite_orbit_share else random_wfa(rng)
        r = nerode(a, cfg.max_states)
        da = derivative_automaton(a, cfg.max_states)
        tally["nerode " + r.status.value] += 1
        tally["derivative " + da.status.value] += 1
        if r.complete:
            assert complete_equiv_bounded(a, r.automaton, cfg.check_len) is None
        if da.complete:
            assert language_equiv_bounded(a, da.automaton, cfg.check_len) is None
        if r.complete and da.complete:
            gaps[len(r.states) - len(da.states)] += 1

    agree = Counter()
    for i in range(cfg.wavs_instances):
        w = random_linear_wavs(rng) if i % 2 else random_wavs(rng)
        verdict = linearity_check(w).linear
        agree[(verdict, verdict == linear_by_systems(w))] += 1
    return {"tally": tally, "gaps": gaps, "agree": agree}


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    defaults = SweepConfig()
    for name, value in asdict(defaults).items():
        p.add_argument("--" + name.replace("_", "-"), type=type(value), default=value)
    cfg = SweepConfig(**vars(p.parse_args(argv)))

    start = time.perf_counter()
    out = sweep(cfg)
    print(f"config: {asdict(cfg)}")
    for key in sorted(out["tally"]):
        print(f"  {key:<36} {out['tally'][key]}")
    print("  nerode states minus derivative states (count of instances):")
    for gap in sorted(out["gaps"]):
        print(f"    {gap:>4}: {out['gaps'][gap]}")
    print("  rank test vs per-system solving:")
    for (linear, same), count in sorted(out["agree"].items()):
        label = "linear" if linear else "nonlinear"
        print(f"    {label:<10} {'agree' if same else 'DISAGREE'}: {count}")
    print(f"elapsed {time.perf_counter() - start:.1f}s")


if __name__ == "__main__":
    main()
