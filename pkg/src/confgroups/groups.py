"""Classification of the fundamental groups of affine configuration strata.

classify(k, i, n, flavor) names the group of the stratum of k-point
configurations in C^n whose affine span has dimension i, for ordered or
unordered points.  Each descriptor carries a decidable word problem:

* braid-flavored tags reduce to the Garside normal form (quotients by the
  central half-twist square reduce the Delta power mod 2);
* pure-braid words are translated into braid words first -- there is no
  native pure-braid rewriting;
* the top unordered case (i = n = k-1) uses a central-extension model:
  an element is determined by its symmetric-group image together with the
  power of the central element T = s_i^2, computed from the exponent sum
  and the Coxeter length of the image.

Words for the top case are carried in BraidWord containers on n+1 strands,
but the letters mean the geometric generators exchanging the basepoint
region with point i -- their symmetric-group images are the star
transpositions (0 i), not adjacent ones.  sigma_prime(i, n) gives the
change of generators that satisfies the Artin relations.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braids import (
    BraidWord,
    GarsideForm,
    Permutation,
    PureGeneratorId,
    delta_word,
    equal_in_braid,
    exponent_sum,
    garside_normal_form,
    inverse,
    multiply,
    permutation_image,
    pure_word_to_braid,
)
from .fpgroups import Word


class GroupError(ValueError):
    """Invalid classification input or group-element construction."""


class EmptyStratumError(GroupError):
    """The requested (k, i, n) stratum contains no configurations."""


class AlphabetError(GroupError):
    """A word was given over the wrong generator alphabet for its group."""


ORDERED = "ordered"
UNORDERED = "unordered"

_TAGS = (
    "trivial",
    "integers",
    "symmetric",
    "pure_braid",
    "braid",
    "pure_braid_mod_D",
    "braid_mod_delta_sq",
    "central_ext_top",
)


@dataclass(frozen=True)
class GroupDescriptor:
    tag: str
    k: int
    i: int
    n: int
    flavor: str

    def __post_init__(self) -> None:
        if self.tag not in _TAGS:
            raise GroupError(f"unknown tag {self.tag!r}")
        if self.flavor not in (ORDERED, UNORDERED):
            raise GroupError(f"unknown flavor {self.flavor!r}")

    @property
    def parameter(self) -> int:
        """Strand/point count: k for braid-family tags, n+1 for the top case."""
        if self.tag == "central_ext_top":
            return self.n + 1
        return self.k

    def describe(self) -> str:
        p = self.parameter
        squares = "σ1²=σ2²" if p == 3 else f"σ1²=⋯=σ{p - 1}²"
        return {
            "trivial": "trivial",
            "integers": "ℤ",
            "symmetric": f"Σ_{p}",
            "pure_braid": f"PB_{p}",
            "braid": f"B_{p}",
            "pure_braid_mod_D": f"PB_{p} / ⟨D⟩",
            "braid_mod_delta_sq": f"B_{p} / ⟨Δ²⟩",
            "central_ext_top": f"B_{p} / ⟨{squares}⟩",
        }[self.tag]


def classify(k: int, i: int, n: int, flavor: str) -> GroupDescriptor:
    """The fundamental group of the (k, i, n) stratum, ordered or unordered.

    Nonempty strata need i <= min(k-1, n), with i = 0 exactly when k = 1
    (k points span at most dimension k-1, and 2+ distinct points span at
    least a line).
    """
    if flavor not in (ORDERED, UNORDERED):
        raise GroupError(f"flavor must be ordered or unordered, got {flavor!r}")
    if k < 1 or n < 1 or i < 0 or i > n:
        raise GroupError(f"need k >= 1, n >= 1, 0 <= i <= n; got k={k}, i={i}, n={n}")
    if i > min(k - 1, n) or (i == 0) != (k == 1):
        raise EmptyStratumError(
            f"no configuration of {k} point(s) in C^{n} spans dimension {i}"
        )
    if i == 1 and n == 1:
        tag = "pure_braid" if flavor == ORDERED else "braid"
    elif i == 1 and n > 1:
        tag = "pure_braid_mod_D" if flavor == ORDERED else "braid_mod_delta_sq"
    elif i == n == k - 1:
        tag = "integers" if flavor == ORDERED else "central_ext_top"
    else:
        tag = "trivial" if flavor == ORDERED else "symmetric"
    return GroupDescriptor(tag, k, i, n, flavor)


def descriptor_for(tag: str, parameter: int = 0) -> GroupDescriptor:
    """A descriptor for the named group with a representative (k, i, n);
    parameter is the strand count (braid family) or point count (top case)."""
    if tag in ("braid", "pure_braid", "braid_mod_delta_sq", "pure_braid_mod_D", "symmetric"):
        if parameter < 2:
            raise GroupError(f"{tag} needs a strand count of at least 2")
    if tag == "trivial":
        return GroupDescriptor("trivial", 1, 0, 1, ORDERED)
    if tag == "integers":
        return GroupDescriptor("integers", 3, 2, 2, ORDERED)
    if tag == "symmetric":
        return GroupDescriptor("symmetric", parameter, 2, 2, UNORDERED)
    if tag == "pure_braid":
        return GroupDescriptor("pure_braid", parameter, 1, 1, ORDERED)
    if tag == "braid":
        return GroupDescriptor("braid", parameter, 1, 1, UNORDERED)
    if tag == "pure_braid_mod_D":
        return GroupDescriptor("pure_braid_mod_D", parameter, 1, 2, ORDERED)
    if tag == "braid_mod_delta_sq":
        return GroupDescriptor("braid_mod_delta_sq", parameter, 1, 2, UNORDERED)
    if tag == "central_ext_top":
        if parameter < 3:
            raise GroupError("the top unordered case needs n >= 2, i.e. at least 3 points")
        n = parameter - 1
        return GroupDescriptor("central_ext_top", parameter, n, n, UNORDERED)
    raise GroupError(f"unknown tag {tag!r}")


def case_statement(d: GroupDescriptor) -> str:
    """The classification identity this descriptor instantiates."""
    space = "F" if d.flavor == ORDERED else "C"
    stratum = f"{space}_k^(i,n) with (k,i,n)=({d.k},{d.i},{d.n})"
    return {
        "trivial": f"pi_1({stratum}) = 1 (simply connected off the loci i=1 and i=n=k-1)",
        "integers": f"pi_1({stratum}) = Z (top stratum of k=n+1 ordered points)",
        "symmetric": f"pi_1({stratum}) = Sigma_k (off the loci i=1 and i=n=k-1)",
        "pure_braid": f"pi_1({stratum}) = PB_k (points on a line in C)",
        "braid": f"pi_1({stratum}) = B_k (points on a line in C)",
        "pure_braid_mod_D": f"pi_1({stratum}) = PB_k/<D_k> (collinear points, n > 1)",
        "braid_mod_delta_sq": f"pi_1({stratum}) = B_k/<Delta_k^2> (collinear points, n > 1)",
        "central_ext_top": (
            f"pi_1({stratum}) = B_(n+1)/<s_1^2=...=s_n^2>, a central Z-extension of Sigma_(n+1)"
        ),
    }[d.tag]


# ---------------------------------------------------------------------------
# elements


@dataclass(frozen=True)
class CentralExtElement:
    """(twist, perm) invariant of the top unordered group on n+1 points.

    perm acts on {0, ..., n} stored 1-indexed (label j at position j+1); twist
    counts the power of the central element T once a reduced lift of perm is
    split off, so twist = (exponent_sum - inversions(perm)) / 2.
    """

    n_plus_1: int
    twist: int
    perm: Permutation

    def __post_init__(self) -> None:
        if self.perm.size != self.n_plus_1:
            raise GroupError("permutation size must be n+1")


@dataclass(frozen=True)
class GroupElement:
    descriptor: GroupDescriptor
    payload: object  # None | int | Permutation | GarsideForm | CentralExtElement


def star_transposition(n_plus_1: int, i: int) -> Permutation:
    """Image of the i-th geometric generator: exchange labels 0 and i."""
    if not 1 <= i <= n_plus_1 - 1:
        raise GroupError(f"generator index {i} out of range")
    images = list(range(1, n_plus_1 + 1))
    images[0], images[i] = images[i], images[0]
    return Permutation(n_plus_1, tuple(images))


def _star_image(w: BraidWord) -> Permutation:
    p = Permutation.identity(w.strands)
    for i, _ in w.letters:
        p = p.compose(star_transposition(w.strands, i))
    return p


def _centered_mod_delta_sq(form: GarsideForm) -> GarsideForm:
    # Delta^2 is central, so the coset representative just reduces the Delta
    # power into {0, 1}; the factors are untouched.
    return GarsideForm(form.strands, form.delta_power & 1, form.factors)


def _require_braid_word(d: GroupDescriptor, w: object) -> BraidWord:
    if not isinstance(w, BraidWord):
        raise AlphabetError(f"{d.tag} expects a word in the s-generators")
    if w.strands != d.parameter:
        raise AlphabetError(
            f"word has {w.strands} strands but {d.describe()} needs {d.parameter}"
        )
    return w


def _require_pure_word(d: GroupDescriptor, w: object) -> BraidWord:
    if isinstance(w, BraidWord):
        raise AlphabetError(f"{d.tag} expects a word in the a[i,j]-generators")
    try:
        letters = tuple(w)  # type: ignore[arg-type]
        for gen, sign in letters:
            if not isinstance(gen, PureGeneratorId) or sign not in (1, -1):
                raise TypeError
    except TypeError:
        raise AlphabetError(f"{d.tag} expects (PureGeneratorId, sign) letters") from None
    return pure_word_to_braid(d.parameter, letters)


def element_from_word(d: GroupDescriptor, w: object) -> GroupElement:
    """Canonical payload for the word: see the module docstring per tag."""
    if d.tag == "trivial":
        return GroupElement(d, None)
    if d.tag == "integers":
        if not isinstance(w, int):
            raise AlphabetError("the infinite-cyclic group expects an integer exponent")
        return GroupElement(d, w)
    if d.tag == "symmetric":
        return GroupElement(d, permutation_image(_require_braid_word(d, w)))
    if d.tag == "braid":
        return GroupElement(d, garside_normal_form(_require_braid_word(d, w)))
    if d.tag == "braid_mod_delta_sq":
        form = garside_normal_form(_require_braid_word(d, w))
        return GroupElement(d, _centered_mod_delta_sq(form))
    if d.tag == "pure_braid":
        return GroupElement(d, garside_normal_form(_require_pure_word(d, w)))
    if d.tag == "pure_braid_mod_D":
        form = garside_normal_form(_require_pure_word(d, w))
        return GroupElement(d, _centered_mod_delta_sq(form))
    if d.tag == "central_ext_top":
        word = _require_braid_word(d, w)
        perm = _star_image(word)
        exp = exponent_sum(word)
        twist2 = exp - perm.inversions()
        if twist2 & 1:
            raise GroupError("exponent sum and image length disagree in parity")
        return GroupElement(d, CentralExtElement(d.parameter, twist2 // 2, perm))
    raise GroupError(f"unknown tag {d.tag!r}")


def equal_in_group(d: GroupDescriptor, u: object, v: object) -> bool:
    """Word problem for the classified group."""
    if d.tag == "trivial":
        return True
    if d.tag == "integers":
        if not (isinstance(u, int) and isinstance(v, int)):
            raise AlphabetError("the infinite-cyclic group expects integer exponents")
        return u == v
    if d.tag == "symmetric":
        return permutation_image(_require_braid_word(d, u)) == permutation_image(
            _require_braid_word(d, v)
        )
    if d.tag == "braid":
        return equal_in_braid(_require_braid_word(d, u), _require_braid_word(d, v))
    if d.tag == "pure_braid":
        return equal_in_braid(_require_pure_word(d, u), _require_pure_word(d, v))
    if d.tag in ("braid_mod_delta_sq", "pure_braid_mod_D"):
        convert = _require_braid_word if d.tag == "braid_mod_delta_sq" else _require_pure_word
        quotient = garside_normal_form(multiply(convert(d, u), inverse(convert(d, v))))
        return quotient.delta_power % 2 == 0 and not quotient.factors
    if d.tag == "central_ext_top":
        return element_from_word(d, u).payload == element_from_word(d, v).payload
    raise GroupError(f"unknown tag {d.tag!r}")


def tau(d: GroupDescriptor, w: object) -> Permutation:
    """Projection to the symmetric group (unordered flavors only)."""
    if d.flavor != UNORDERED:
        raise GroupError("tau is defined for unordered groups only")
    if d.tag == "central_ext_top":
        return _star_image(_require_braid_word(d, w))
    if d.tag in ("symmetric", "braid", "braid_mod_delta_sq"):
        return permutation_image(_require_braid_word(d, w))
    raise GroupError(f"tau is not defined for tag {d.tag!r}")


# ---------------------------------------------------------------------------
# the top unordered case: generators and translations


def sigma_prime(i: int, n: int) -> BraidWord:
    """The Artin-like generator s_1 ... s_(i-1) s_i s_(i-1)^-1 ... s_1^-1 of the
    top group, as a word in the geometric generators (n+1 strand container)."""
    if not 1 <= i <= n:
        raise GroupError(f"need 1 <= i <= n, got i={i}, n={n}")
    up = [(t, 1) for t in range(1, i)]
    down = [(t, -1) for t in range(i - 1, 0, -1)]
    return BraidWord(n + 1, tuple(up + [(i, 1)] + down))


def geometric_to_artin_word(w: BraidWord) -> Word:
    """Rewrite a geometric word over the Artin-like alphabet s1..sn.

    The inverse change of generators is s_i = s'_1^-1 ... s'_(i-1)^-1 s'_i
    s'_(i-1) ... s'_1, so traced words feed the unordered_top presentation.
    """
    letters: list[tuple[str, int]] = []
    for i, sign in w.letters:
        core = (
            [(f"s{t}", -1) for t in range(1, i)]
            + [(f"s{i}", 1)]
            + [(f"s{t}", 1) for t in range(i - 1, 0, -1)]
        )
        if sign < 0:
            core = [(name, -s) for name, s in reversed(core)]
        letters += core
    return tuple(letters)


def central_element(n: int) -> BraidWord:
    """T = s_1^2 (geometric alphabet), the generator of the center."""
    if n < 1:
        raise GroupError("need n >= 1")
    return BraidWord(n + 1, ((1, 1), (1, 1)))


def central_ext_relators(n: int) -> list[BraidWord]:
    """Defining relators of the top group over the geometric alphabet:
    braid-like triples for every pair i != j, plus square identifications."""
    rels: list[BraidWord] = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            a, b = (i, 1), (j, 1)
            ai, bi = (i, -1), (j, -1)
            rels.append(BraidWord(n + 1, (a, b, a, bi, ai, bi)))
    for i in range(1, n):
        rels.append(BraidWord(n + 1, ((i, 1), (i, 1), (i + 1, -1), (i + 1, -1))))
    return rels


def descriptor_relators(d: GroupDescriptor) -> list[object]:
    """Defining relators over the descriptor's own alphabet, for congruence
    testing: braid-style tags get Artin relators (plus the killed center where
    applicable), pure tags get the Yang-Baxter relators (plus the full twist),
    the top tag its geometric relators."""
    k = d.parameter
    if d.tag in ("braid", "braid_mod_delta_sq", "symmetric"):
        rels: list[object] = []
        for i in range(1, k - 1):
            for j in range(i + 2, k):
                rels.append(BraidWord(k, ((i, 1), (j, 1), (i, -1), (j, -1))))
        for i in range(1, k - 1):
            rels.append(
                BraidWord(k, ((i, 1), (i + 1, 1), (i, 1), (i + 1, -1), (i, -1), (i + 1, -1)))
            )
        if d.tag == "braid_mod_delta_sq":
            dd = delta_word(k)
            rels.append(multiply(dd, dd))
        if d.tag == "symmetric":
            rels += [BraidWord(k, ((i, 1), (i, 1))) for i in range(1, k)]
        return rels
    if d.tag in ("pure_braid", "pure_braid_mod_D"):
        out: list[object] = []

        def gen(i: int, j: int, s: int = 1) -> tuple:
            return ((PureGeneratorId(i, j, k), s),)

        def inv(word: tuple) -> tuple:
            return tuple((g, -s) for g, s in reversed(word))

        for i in range(1, k + 1):
            for j in range(i + 1, k + 1):
                for kk in range(j + 1, k + 1):
                    p1 = gen(i, j) + gen(i, kk) + gen(j, kk)
                    p2 = gen(i, kk) + gen(j, kk) + gen(i, j)
                    p3 = gen(j, kk) + gen(i, j) + gen(i, kk)
                    out.append(p1 + inv(p2))
                    out.append(p2 + inv(p3))
        for i in range(1, k + 1):
            for j in range(i + 1, k + 1):
                for kk in range(j + 1, k + 1):
                    for l in range(kk + 1, k + 1):
                        a_kl, a_ij = gen(kk, l), gen(i, j)
                        a_il, a_jk = gen(i, l), gen(j, kk)
                        a_jl, a_ik = gen(j, l), gen(i, kk)
                        for x, y in (
                            (a_kl, a_ij),
                            (a_il, a_jk),
                            (a_jl, inv(a_jk) + a_ik + a_jk),
                            (a_jl, a_kl + a_ik + inv(a_kl)),
                        ):
                            out.append(x + y + inv(x) + inv(y))
        if d.tag == "pure_braid_mod_D":
            out.append(
                tuple(
                    (PureGeneratorId(i, j, k), 1)
                    for j in range(2, k + 1)
                    for i in range(1, j)
                )
            )
        return out
    if d.tag == "central_ext_top":
        return list(central_ext_relators(d.parameter - 1))
    if d.tag == "integers":
        return [0]
    return []


def identity_word(d: GroupDescriptor) -> object:
    if d.tag == "integers":
        return 0
    if d.tag == "trivial":
        return None
    if d.tag in ("pure_braid", "pure_braid_mod_D"):
        return ()
    return BraidWord(d.parameter)
