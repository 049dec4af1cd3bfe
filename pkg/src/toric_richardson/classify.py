"""Toricness of Bruhat intervals via four independent predicates.

An interval [v, w] is toric when it contains no 2-crown (an interval shaped like
the Bruhat order of S_3).  Equivalent conditions checked here:

* no 2-crown subinterval,
* the interval is a lattice,
* the poset of its subintervals (with the empty set adjoined) is a lattice,
* the R-polynomial has q^(d-1) coefficient equal to -d.

``classify_toric`` runs all four and refuses to answer if they disagree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import DisagreementBug
from .perm import BruhatInterval, IntervalPoset, Permutation, interval, interval_poset, r_polynomial
from .poset import LatticeCheck, Poset, is_lattice

Pair = tuple[Permutation, Permutation]


def is_two_crown(I: BruhatInterval) -> bool:
    if I.d != 3 or len(I) != 6:
        return False
    atoms, coatoms = I.ranks[1], I.ranks[2]
    if len(atoms) != 2 or len(coatoms) != 2:
        return False
    return len(I.covers) == 8 and all(I.leq(a, c) for a in atoms for c in coatoms)


def _mask_is_two_crown(I: BruhatInterval, a: int, b: int, mask: int) -> bool:
    if mask.bit_count() != 6:
        return False
    ra = I.rank_of[I.elements[a]]
    layer1 = [x for x in range(len(I)) if mask >> x & 1 and I.rank_of[I.elements[x]] == ra + 1]
    layer2 = [x for x in range(len(I)) if mask >> x & 1 and I.rank_of[I.elements[x]] == ra + 2]
    if len(layer1) != 2 or len(layer2) != 2:
        return False
    return all(I.down_masks[c] >> x & 1 for x in layer1 for c in layer2)


def has_two_crown_subinterval(I: BruhatInterval) -> Optional[Pair]:
    """Lexicographically first length-3 subinterval that is a 2-crown."""
    els = I.elements
    rank = I.rank_of
    order = sorted(range(len(els)), key=lambda x: els[x])
    for a in order:
        ra = rank[els[a]]
        ups = I.up_masks[a]
        for b in order:
            if rank[els[b]] != ra + 3 or not ups >> b & 1:
                continue
            mask = ups & I.down_masks[b]
            if _mask_is_two_crown(I, a, b, mask):
                return (els[a], els[b])
    return None


def interval_as_poset(I: BruhatInterval) -> Poset:
    return Poset(tuple(I.elements), I.down_masks)


def interval_poset_is_lattice(P: IntervalPoset) -> LatticeCheck:
    """Lattice test specialised to Int[v,w].

    The poset has a top, so it is a lattice iff all meets exist.  The meet of
    two subintervals is their intersection when that is empty or an interval;
    a convex set that is neither has two minimal or two maximal elements and
    then no largest subinterval inside it.
    """
    masks = P.masks
    present = set(masks)
    order = sorted(range(1, len(masks)), key=lambda x: (-masks[x].bit_count(), x))
    for pos, x in enumerate(order):
        mx = masks[x]
        for y in order[pos + 1 :]:
            m = mx & masks[y]
            if m and m not in present:
                return LatticeCheck(False, (P.members[x], P.members[y], "meet"))
    return LatticeCheck(True)


def r_poly_toric(v: Permutation, w: Permutation, d: int) -> bool:
    if d == 0:
        return True
    return r_polynomial(v, w).coeff(d - 1) == -d


@dataclass(frozen=True)
class ToricVerdict:
    v: Permutation
    w: Permutation
    d: int
    is_toric: bool
    by_two_crown: bool
    by_lattice: bool
    by_interval_poset_lattice: bool
    by_r_poly: bool
    witness: Optional[tuple] = None
    is_hypercube: bool = False
    lattice_witness: Optional[tuple] = field(default=None, compare=False)

    def to_json(self) -> dict:
        def enc(x):
            if isinstance(x, Permutation):
                return x.to_list()
            if isinstance(x, tuple):
                return [enc(y) for y in x]
            return x

        return {
            "v": self.v.to_list(),
            "w": self.w.to_list(),
            "d": self.d,
            "is_toric": self.is_toric,
            "by_two_crown": self.by_two_crown,
            "by_lattice": self.by_lattice,
            "by_interval_poset_lattice": self.by_interval_poset_lattice,
            "by_r_poly": self.by_r_poly,
            "is_hypercube": self.is_hypercube,
            "witness": enc(self.witness),
            "lattice_witness": enc(self.lattice_witness),
        }


def classify_toric(v: Permutation, w: Permutation, I: Optional[BruhatInterval] = None) -> ToricVerdict:
    I = I if I is not None else interval(v, w)
    crown = has_two_crown_subinterval(I)
    lat = is_lattice(interval_as_poset(I))
    ilat = interval_poset_is_lattice(interval_poset(I))
    rp = r_poly_toric(v, w, I.d)
    flags = (crown is None, lat.ok, ilat.ok, rp)
    if len(set(flags)) != 1:
        raise DisagreementBug(
            f"toricness tests disagree on [{v},{w}]: no-crown={flags[0]} lattice={flags[1]} "
            f"int-lattice={flags[2]} r-poly={flags[3]}"
        )
    witness = None if flags[0] else crown
    return ToricVerdict(
        v=v,
        w=w,
        d=I.d,
        is_toric=flags[0],
        by_two_crown=flags[0],
        by_lattice=flags[1],
        by_interval_poset_lattice=flags[2],
        by_r_poly=flags[3],
        witness=witness,
        is_hypercube=I.is_hypercube(),
        lattice_witness=lat.witness,
    )


def is_toric(v: Permutation, w: Permutation) -> bool:
    """Cheap single test (R-polynomial), for callers that only need the answer."""
    from .perm import length

    return r_poly_toric(v, w, length(w) - length(v))
