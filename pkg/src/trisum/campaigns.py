"""Seeded verification campaigns.

A campaign runs ``trials`` independent instances of one theorem.  Trial ``t``
draws its instance from a seed derived from (theorem, seed, t, attempt); a
DegenerateConstruction resamples with the next attempt and counts as a skip.
Results are ordered by trial index, so reports do not depend on how many
worker processes ran them.
"""

import hashlib
import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from trisum import configurations as cfg
from trisum import triangles as tg
from trisum.errors import DegenerateConstruction, GeometryError
from trisum.sampling import DEGENERATE_CLASSES, degenerate_pair, random_element, random_pseudo

SKIP_FACTOR = 10


class GeneratorHealthError(GeometryError):
    """Too many resamples: the instance generator, not the theorem, is at fault."""


def derive_seed(theorem, seed, index, attempt=0):
    h = hashlib.sha256(f"{theorem}:{seed}:{index}:{attempt}".encode()).digest()
    return int.from_bytes(h[:8], "big")


# -- trial functions: seed -> (passed, instance json) ---------------------

def _central(check):
    def trial(seed):
        scene = cfg.random_central_scene(seed)
        return check(scene), scene.to_json()
    return trial


def _proof2(scene):
    return cfg.verify_proof2_path(scene) and all(cfg.quartic_claims(scene).values())


def _pappus(seed):
    A, B = cfg.random_pappus_instance(seed)
    return cfg.pappus_line(A, B) is not None, _triples_json(A, B)


def _gen_pappus(seed):
    A, B = cfg.random_pappus_instance(seed)
    ok = cfg.generalized_pappus_center(A, B) is not None and cfg.pappus_reduction_holds(A, B)
    return ok, _triples_json(A, B)


def _triples_json(A, B):
    return {"A": [p.to_json() for p in A], "B": [p.to_json() for p in B]}


def _hexagon(check):
    def trial(seed):
        hexagon, conic = cfg.random_conic_hexagon(seed)
        ok = all(conic.contains(p) for p in hexagon) and check(hexagon)
        return ok, {"hexagon": [p.to_json() for p in hexagon],
                    "conic": [[str(v) for v in row] for row in conic.sym]}
    return trial


def _reye(scene):
    return cfg.reye_dual_counts(scene) == (16, 3, 12, 4)


def group_axiom_claims(x, y, z):
    zero = tg.ZERO
    return {
        "commutative": x + y == y + x,
        "associative": (x + y) + z == x + (y + z),
        "identity": x + zero == x and zero + x == x,
        "inverse": x + (-x) == zero,
        "pre-sum commutative": tg.presum_coords(x, y) == tg.presum_coords(y, x),
        "pre-sum cancellation": (tg.presum_coords(x, tg.presum_coords(x, y)) == y
                                 and tg.presum_coords(y, tg.presum_coords(x, y)) == x),
    }


def _group_axioms(seed):
    rng = random.Random(seed)
    x, y, z = (random_element(rng) for _ in range(3))
    ok = all(group_axiom_claims(x, y, z).values())
    return ok, {"elements": [e.to_json() for e in (x, y, z)]}


def _presum_equivalence(seed):
    rng = random.Random(seed)
    # half the trials are forced into one of the degenerate classes
    if rng.random() < 0.5:
        x, y = degenerate_pair(rng, rng.choice(DEGENERATE_CLASSES))
    else:
        x, y = random_element(rng, tg.Kind.GEOMETRIC), random_element(rng, tg.Kind.GEOMETRIC)
    ok = tg.presum_geometric(x, y) == tg.presum_coords(x, y)
    return ok, {"elements": [x.to_json(), y.to_json()]}


def _lemma_pseudo(seed):
    rng = random.Random(seed)
    x, y = random_pseudo(rng), random_pseudo(rng)
    ok = tg.pseudo_presum_via_midpoints(x, y) == tg.presum_coords(x, y)
    return ok, {"elements": [x.to_json(), y.to_json()]}


THEOREMS = {
    "desargues": _central(cfg.verify_desargues),
    "gen_desargues": _central(cfg.verify_generalized_desargues),
    "proof1": _central(cfg.verify_proof1_path),
    "proof2": _central(_proof2),
    "pappus": _pappus,
    "gen_pappus": _gen_pappus,
    "pascal": _hexagon(lambda h: cfg.pascal_line(h) is not None),
    "gen_pascal": _hexagon(lambda h: cfg.generalized_pascal_center(h) is not None),
    "another_pascal": _hexagon(lambda h: cfg.another_pascal_center(h) is not None
                               and cfg.another_pascal_intermediate(h)),
    "reye_counts": _central(_reye),
    "group_axioms": _group_axioms,
    "presum_equivalence": _presum_equivalence,
    "lemma_pseudo": _lemma_pseudo,
}


@dataclass(frozen=True)
class CampaignSpec:
    theorem: str
    trials: int = 1000
    seed: int = 0
    parallelism: int = 1

    def __post_init__(self):
        if self.theorem not in THEOREMS:
            raise ValueError(f"unknown theorem {self.theorem!r}")
        if self.trials < 1 or self.parallelism < 1:
            raise ValueError("trials and parallelism must be positive")


@dataclass
class VerificationReport:
    theorem: str
    trials: int
    seed: int
    seeds: list = field(default_factory=list)
    passes: int = 0
    failures: int = 0
    skips: int = 0
    first_failure: dict = None

    @property
    def ok(self):
        return self.failures == 0 and self.passes == self.trials

    def to_json(self):
        return asdict(self)

    def dumps(self):
        return json.dumps(self.to_json(), indent=2, sort_keys=True) + "\n"


def run_trial(theorem, seed, index, max_attempts):
    """Run one trial; returns a plain dict so it crosses process boundaries."""
    fn = THEOREMS[theorem]
    skips = 0
    for attempt in range(max_attempts):
        s = derive_seed(theorem, seed, index, attempt)
        try:
            ok, instance = fn(s)
        except DegenerateConstruction:
            skips += 1
            continue
        return {"index": index, "seed": s, "ok": bool(ok), "skips": skips,
                "instance": None if ok else instance}
    return {"index": index, "seed": None, "ok": False, "skips": skips, "instance": None,
            "exhausted": True}


def _run_chunk(args):
    theorem, seed, indices, max_attempts = args
    return [run_trial(theorem, seed, i, max_attempts) for i in indices]


def run_campaign(spec):
    max_attempts = SKIP_FACTOR * spec.trials + 1
    indices = list(range(spec.trials))
    if spec.parallelism == 1:
        results = _run_chunk((spec.theorem, spec.seed, indices, max_attempts))
    else:
        n = spec.parallelism
        chunks = [(spec.theorem, spec.seed, indices[w::n], max_attempts) for w in range(n)]
        with ProcessPoolExecutor(max_workers=n) as pool:
            results = [r for part in pool.map(_run_chunk, chunks) for r in part]
        results.sort(key=lambda r: r["index"])
    report = VerificationReport(spec.theorem, spec.trials, spec.seed)
    for r in results:
        report.skips += r["skips"]
        if r.get("exhausted"):
            raise GeneratorHealthError(f"trial {r['index']} never produced a usable instance")
        report.seeds.append(r["seed"])
        if r["ok"]:
            report.passes += 1
        else:
            report.failures += 1
            if report.first_failure is None:
                report.first_failure = {"index": r["index"], "seed": r["seed"],
                                        "instance": r["instance"]}
    if report.skips > SKIP_FACTOR * spec.trials:
        raise GeneratorHealthError(f"{report.skips} resamples for {spec.trials} trials")
    return report
