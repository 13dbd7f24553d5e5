"""
Binary issue selection control and its reduction to BVPM.
"""

import random
from typing import Optional, Union

from election import Instance, InstanceError, NormSpec, ScoringRule

from .models import BiscInstance, DecoderSpec, ReductionOutput


def random_bisc(
    dimension: int,
    voters: int,
    seed: Union[int, random.Random, None] = None,
    opposed: bool = True,
) -> BiscInstance:
    """
    Seeded random two-candidate BISC instance.

    With opposed=True the rival disagrees with the target on every issue,
    which is the shape bisc_to_bvpm accepts.
    """
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    target = tuple(rng.randint(0, 1) for _ in range(dimension))
    if opposed:
        rival = tuple(1 - x for x in target)
    else:
        rival = tuple(rng.randint(0, 1) for _ in range(dimension))
    profile = tuple(tuple(rng.randint(0, 1) for _ in range(dimension)) for _ in range(voters))
    return BiscInstance(dimension=dimension, target=target, rival=rival, voters=profile)


def bisc_to_bvpm(bisc: BiscInstance, p: Optional[int] = 1) -> ReductionOutput:
    """
    Issue selection as perception manipulation.

    Issues are relabeled so the target is all-ones and the rival all-zeros;
    an issue left at 1 is "selected". The budget ε = (d−1)^{1/p} allows
    flipping every issue but one, so the selected set is never empty.

    Requires target and rival to disagree on every issue; InstanceError
    otherwise. Agreeing issues are not dropped: selecting one alone ties
    every voter, and the target takes a tied election, so such an instance
    is already YES (bisc_brute_force answers it).
    """
    d = bisc.dimension
    if d < 1:
        raise InstanceError("BISC needs at least one issue")
    agreeing = [k for k in range(d) if bisc.target[k] == bisc.rival[k]]
    if agreeing:
        raise InstanceError(
            f"target and rival agree on issues {agreeing}; the reduction needs them opposed everywhere, "
            "and selecting one alone already elects the target"
        )

    flip = tuple(1 - t for t in bisc.target)
    voters = tuple(tuple(float(v ^ f) for v, f in zip(voter, flip)) for voter in bisc.voters)
    norm = NormSpec(p=p)
    epsilon = float(d - 1) ** (1.0 / p)

    instance = Instance(
        issue_space="binary",
        dimension=d,
        candidates=((1.0,) * d, (0.0,) * d),
        voters=voters,
        weights=bisc.weights,
        norm=norm,
        scoring=ScoringRule.plurality(2),
        objective="constructive",
        epsilon=epsilon,
    )
    decoder = DecoderSpec(kind="issue_subset", coordinates=tuple(range(d)), true_value=1.0, false_value=0.0)
    return ReductionOutput(
        construction="bisc-bvpm",
        instance=instance,
        decoder=decoder,
        parameters={"epsilon": epsilon, "p": float(p)},
    )
