"""Hopf-Galois structures over the cyclotomic base field Q(zeta_1).

The Galois closure of the radical extension is Q(zeta, w) with w^{p^n} = a.
Over the base Q(zeta_1) = Q(zeta^{p^{n-1}}) its Galois group is generated by

    sigma : w -> zeta*w,  zeta -> zeta            (order p^n)
    beta  : w -> w,       zeta -> zeta^{pi^{p-1}} (order p^{n-1})

where pi is the fixed primitive root.  This module builds that group, the p
cyclic normal complements of <beta> inside it, their fixed fields, and the
descent Hopf algebras -- fixed rings of twisted group rings -- that act on
Q(zeta_1, w)/Q(zeta_1).  It also provides the generator-level truncation maps
connecting consecutive levels and the raw permutation images of the Galois
groups on the exponent grid, which the census module consumes.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .cyclotomic import (CycloElt, FieldDescriptor, embed, embed_preimage,
                         parse_rat, primitive_root, rat_str, unit_apply)
from .reporting import Report, checked


# ---------------------------------------------------------------------------
# the Galois group over Q(zeta_1)

@dataclass(frozen=True)
class TowerAut:
    """Automorphism (s, b): w -> zeta^s * w, zeta -> zeta^{pi^{(p-1)b}}.

    s lives mod p^n, b mod p^{n-1}; every automorphism of Q(zeta, w) fixing
    Q(zeta_1) has exactly one such normal form.
    """
    p: int
    n: int
    s: int
    b: int

    def __post_init__(self):
        pn = self.p ** self.n
        object.__setattr__(self, "s", self.s % pn)
        object.__setattr__(self, "b", self.b % (self.p ** (self.n - 1)))

    @classmethod
    def identity(cls, p: int, n: int) -> "TowerAut":
        return cls(p, n, 0, 0)

    @classmethod
    def sigma(cls, p: int, n: int) -> "TowerAut":
        return cls(p, n, 1, 0)

    @classmethod
    def beta(cls, p: int, n: int) -> "TowerAut":
        return cls(p, n, 0, 1)

    def unit(self) -> int:
        """The exponent multiplier on zeta: pi^{(p-1)b} mod p^n."""
        return pow(primitive_root(self.p), (self.p - 1) * self.b, self.p ** self.n)

    def compose(self, other: "TowerAut") -> "TowerAut":
        """self after other (function composition)."""
        if (self.p, self.n) != (other.p, other.n):
            raise ValueError("mismatched levels")
        return TowerAut(self.p, self.n,
                        self.s + other.s * self.unit(), self.b + other.b)

    def inverse(self) -> "TowerAut":
        pn = self.p ** self.n
        uinv = pow(self.unit(), -1, pn)
        return TowerAut(self.p, self.n, -self.s * uinv, -self.b)

    def pow(self, k: int) -> "TowerAut":
        if k < 0:
            return self.inverse().pow(-k)
        acc, base = TowerAut.identity(self.p, self.n), self
        while k:
            if k & 1:
                acc = acc.compose(base)
            base = base.compose(base)
            k >>= 1
        return acc

    def order(self) -> int:
        k, g = 1, self
        while g != TowerAut.identity(self.p, self.n):
            g = g.compose(self)
            k += 1
        return k


# ---------------------------------------------------------------------------
# the ambient field Q(zeta, w)

class BigFieldElt:
    """Element of Q(zeta, w), w^{p^n} = a: a w-power vector of cyclotomic
    coefficients, fully reduced (zeta mod the cyclotomic polynomial, w-exponents
    mod p^n with a factor of the radicand on wrap)."""

    __slots__ = ("p", "n", "a", "coeffs")

    def __init__(self, p: int, n: int, a: Fraction, coeffs):
        coeffs = tuple(coeffs)
        if len(coeffs) != p ** n:
            raise ValueError("expected %d w-coefficients" % p ** n)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, *args):
        raise AttributeError("BigFieldElt is immutable")

    @property
    def field(self) -> FieldDescriptor:
        return FieldDescriptor(self.p, self.n)

    @classmethod
    def zero(cls, p: int, n: int, a) -> "BigFieldElt":
        f = FieldDescriptor(p, n)
        return cls(p, n, a, [CycloElt.zero(f)] * p ** n)

    @classmethod
    def one(cls, p: int, n: int, a) -> "BigFieldElt":
        return cls.monomial(p, n, a, 0, 0)

    @classmethod
    def monomial(cls, p: int, n: int, a, zeta_exp: int, w_exp: int,
                 coeff=1) -> "BigFieldElt":
        f = FieldDescriptor(p, n)
        cs = [CycloElt.zero(f)] * p ** n
        cs[w_exp % p ** n] = CycloElt.zeta_power(f, zeta_exp) * coeff
        return cls(p, n, a, cs)

    def _check(self, other: "BigFieldElt"):
        if (self.p, self.n, self.a) != (other.p, other.n, other.a):
            raise ValueError("mismatched field data")

    def __add__(self, other):
        self._check(other)
        return BigFieldElt(self.p, self.n, self.a,
                           [x + y for x, y in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        self._check(other)
        return BigFieldElt(self.p, self.n, self.a,
                           [x - y for x, y in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return BigFieldElt(self.p, self.n, self.a, [-x for x in self.coeffs])

    def scale(self, c) -> "BigFieldElt":
        return BigFieldElt(self.p, self.n, self.a, [x * c for x in self.coeffs])

    def __mul__(self, other):
        self._check(other)
        pn = self.p ** self.n
        f = self.field
        acc = [CycloElt.zero(f) for _ in range(pn)]
        for b1, c1 in enumerate(self.coeffs):
            if not c1:
                continue
            for b2, c2 in enumerate(other.coeffs):
                if not c2:
                    continue
                b, wrap = divmod(b1 + b2, pn)[1], (b1 + b2) // pn
                term = c1 * c2
                if wrap:
                    term = term * self.a
                acc[b] = acc[b] + term
        return BigFieldElt(self.p, self.n, self.a, acc)

    def mul_monomial(self, c: CycloElt, w_exp: int) -> "BigFieldElt":
        """self * (c * w^{w_exp}) without the full convolution."""
        pn = self.p ** self.n
        f = self.field
        acc = [CycloElt.zero(f)] * pn
        for b1, c1 in enumerate(self.coeffs):
            if not c1:
                continue
            b, wrap = (b1 + w_exp) % pn, (b1 + w_exp) // pn
            term = c1 * c
            if wrap:
                term = term * self.a
            acc[b] = term
        return BigFieldElt(self.p, self.n, self.a, acc)

    def __eq__(self, other):
        return (isinstance(other, BigFieldElt)
                and (self.p, self.n, self.a) == (other.p, other.n, other.a)
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.p, self.n, self.a, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        return "BigFieldElt(p=%d, n=%d, a=%s, %r)" % (self.p, self.n, self.a,
                                                      [c for c in self.coeffs])

    def to_json(self) -> dict:
        phi = self.field.degree
        return {
            "p": self.p, "n": self.n, "radicand": rat_str(self.a),
            "coeffs": [[rat_str(self.coeffs[b].coeffs[aexp])
                        for b in range(self.p ** self.n)] for aexp in range(phi)],
        }

    @classmethod
    def from_json(cls, data) -> "BigFieldElt":
        p, n = data["p"], data["n"]
        f = FieldDescriptor(p, n)
        mat = data["coeffs"]
        cs = [CycloElt(f, [parse_rat(mat[aexp][b]) for aexp in range(f.degree)])
              for b in range(p ** n)]
        return cls(p, n, parse_rat(data["radicand"]), cs)


def aut_act(g: TowerAut, x: BigFieldElt) -> BigFieldElt:
    """Apply the automorphism: zeta^A w^B -> zeta^{uA+sB} w^B."""
    if (g.p, g.n) != (x.p, x.n):
        raise ValueError("mismatched levels")
    u, pn = g.unit(), g.p ** g.n
    out = []
    for b, c in enumerate(x.coeffs):
        moved = unit_apply(u, c)
        e = (g.s * b) % pn
        out.append(moved.shift(e) if e else moved)
    return BigFieldElt(x.p, x.n, x.a, out)


# ---------------------------------------------------------------------------
# permutation images on the exponent grid (consumed by the census module)

def grid_aut_images(p: int, n: int, u: int, s: int) -> list[int]:
    """The map (A, B) -> (uA + sB, B) on the grid (Z/p^n)^2, index A*p^n + B.

    Automorphisms do not permute the reduced monomial basis (high zeta
    exponents re-expand), so group construction uses the exponent grid, on
    which every automorphism zeta -> zeta^u, w -> zeta^s w acts by exactly
    this permutation.
    """
    pn = p ** n
    if u % p == 0:
        raise ValueError("zeta-multiplier must be a unit")
    return [((u * A + s * B) % pn) * pn + B
            for A in range(pn) for B in range(pn)]


def sigma_images(p: int, n: int) -> list[int]:
    return grid_aut_images(p, n, 1, 1)


def beta_images(p: int, n: int) -> list[int]:
    return grid_aut_images(p, n, pow(primitive_root(p), p - 1, p ** n), 0)


def cyclo_gen_images(p: int, n: int) -> list[int]:
    """Generator of the full cyclotomic part zeta -> zeta^pi (fixes w)."""
    return grid_aut_images(p, n, primitive_root(p) % p ** n, 0)


# ---------------------------------------------------------------------------
# normal complements of <beta>

def complement_generator(p: int, n: int, i: int) -> TowerAut:
    """Generator of the i-th cyclic normal complement: sigma for i = 0,
    sigma^i * beta^{p^{n-2}} for 1 <= i <= p-1."""
    if not 0 <= i < p:
        raise ValueError("complement index out of range: %d" % i)
    if i == 0:
        return TowerAut.sigma(p, n)
    if n < 2:
        raise ValueError("non-trivial complements need level >= 2")
    return TowerAut(p, n, i, p ** (n - 2))


def complement_elements(p: int, n: int, i: int) -> list[TowerAut]:
    g = complement_generator(p, n, i)
    out, cur = [], TowerAut.identity(p, n)
    for _ in range(p ** n):
        out.append(cur)
        cur = cur.compose(g)
    if cur != TowerAut.identity(p, n):
        raise AssertionError("complement generator does not have order p^n")
    return out


def normal_complements(p: int, n: int) -> list[TowerAut]:
    """The p generators, each verified to generate a cyclic normal complement
    of <beta> of order p^n; the p element sets are verified pairwise distinct."""
    if n < 2:
        raise ValueError("complements are defined for level >= 2")
    pn = p ** n
    ident = TowerAut.identity(p, n)
    beta = TowerAut.beta(p, n)
    sigma = TowerAut.sigma(p, n)
    beta_elems = {beta.pow(j) for j in range(p ** (n - 1))}
    gens, seen = [], []
    for i in range(p):
        g = complement_generator(p, n, i)
        elems = complement_elements(p, n, i)
        eset = frozenset(elems)
        if len(eset) != pn:
            raise AssertionError("complement %d is not of order p^n" % i)
        if eset & beta_elems != {ident}:
            raise AssertionError("complement %d meets <beta>" % i)
        for h in (sigma, beta):
            if h.compose(g).compose(h.inverse()) not in eset:
                raise AssertionError("complement %d is not normal" % i)
        products = {x.compose(d) for x in elems for d in beta_elems}
        if len(products) != pn * p ** (n - 1):
            raise AssertionError("complement %d times <beta> misses elements" % i)
        if any(eset == old for old in seen):
            raise AssertionError("complement %d duplicates an earlier one" % i)
        seen.append(eset)
        gens.append(g)
    return gens


def conjugation_exponent(p: int, n: int, i: int) -> int:
    """m with beta g beta^{-1} = g^m for the i-th complement generator."""
    g = complement_generator(p, n, i)
    beta = TowerAut.beta(p, n)
    target = beta.compose(g).compose(beta.inverse())
    cur = TowerAut.identity(p, n)
    for m in range(p ** n):
        if cur == target:
            return m
        cur = cur.compose(g)
    raise AssertionError("conjugate escaped the cyclic complement")


# ---------------------------------------------------------------------------
# fixed fields (exact kernels on the monomial grid)

def _aut_rows(p: int, n: int, g: TowerAut) -> list[dict[int, Fraction]]:
    """Sparse rows of (action of g) - id over the basis zeta^A w^B,
    flat index B*phi + A."""
    f = FieldDescriptor(p, n)
    pn, phi = f.modulus, f.degree
    u, s = g.unit(), g.s
    zcache = {}
    rows: dict[int, dict[int, Fraction]] = defaultdict(dict)
    for B in range(pn):
        for A in range(phi):
            src = B * phi + A
            e = (u * A + s * B) % pn
            if e not in zcache:
                zcache[e] = CycloElt.zeta_power(f, e)
            for A2, c in enumerate(zcache[e].coeffs):
                if c:
                    dst = B * phi + A2
                    rows[dst][src] = rows[dst].get(src, Fraction(0)) + c
            rows[src][src] = rows[src].get(src, Fraction(0)) - 1
    return [{c: v for c, v in row.items() if v} for row in rows.values()
            if any(row.values())]


def fixed_field(p: int, n: int, gens, a=Fraction(2)) -> list[BigFieldElt]:
    """Q-basis of the subfield fixed by the subgroup the generators produce."""
    f = FieldDescriptor(p, n)
    pn, phi = f.modulus, f.degree
    rows = []
    for g in gens:
        rows.extend(_aut_rows(p, n, g))
    kernel = linalg.sparse_nullspace(rows, pn * phi)
    out = []
    for vec in kernel:
        cs = [[Fraction(0)] * phi for _ in range(pn)]
        for idx, v in vec.items():
            cs[idx // phi][idx % phi] = v
        out.append(BigFieldElt(p, n, a, [CycloElt(f, c) for c in cs]))
    return out


def field_tower_lift(m: int, n: int, x: BigFieldElt) -> BigFieldElt:
    """Inclusion Q(zeta_m, w_m) -> Q(zeta_n, w_n): both generators are p^{n-m}
    powers of the higher ones, so coefficients and w-exponents dilate."""
    if not 1 <= m < n or x.n != m:
        raise ValueError("lift needs a level-m element and m < n")
    step = x.p ** (n - m)
    f = FieldDescriptor(x.p, n)
    cs = [CycloElt.zero(f)] * x.p ** n
    for b, c in enumerate(x.coeffs):
        cs[b * step] = embed(m, n, c)
    return BigFieldElt(x.p, n, x.a, cs)


# ---------------------------------------------------------------------------
# the descent Hopf algebras

class VariantHopfElt:
    """Element of the fixed ring (E_i[N_i])^beta: a vector of p^n ambient-field
    coefficients indexed by powers of the complement generator."""

    __slots__ = ("p", "n", "i", "a", "parts")

    def __init__(self, p: int, n: int, i: int, a, parts):
        parts = tuple(parts)
        if len(parts) != p ** n:
            raise ValueError("expected %d group-ring coefficients" % p ** n)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "i", i)
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "parts", parts)

    def __setattr__(self, *args):
        raise AttributeError("VariantHopfElt is immutable")

    def __eq__(self, other):
        return (isinstance(other, VariantHopfElt)
                and (self.p, self.n, self.i, self.a) ==
                    (other.p, other.n, other.i, other.a)
                and self.parts == other.parts)

    def __hash__(self):
        return hash((self.p, self.n, self.i, self.a, self.parts))

    def scale(self, c) -> "VariantHopfElt":
        return VariantHopfElt(self.p, self.n, self.i, self.a,
                              [x.scale(c) for x in self.parts])

    def apply(self, y: BigFieldElt) -> BigFieldElt:
        """The group-ring action: sum_k x_k * g^k(y)."""
        g = complement_generator(self.p, self.n, self.i)
        acc = BigFieldElt.zero(self.p, self.n, self.a)
        cur = TowerAut.identity(self.p, self.n)
        for k in range(self.p ** self.n):
            if self.parts[k]:
                acc = acc + self.parts[k] * aut_act(cur, y)
            cur = cur.compose(g)
        return acc


def _twisted_rows(p: int, n: int, g: TowerAut, conj_pow: int):
    """Rows of (diagonal action of g) - id on the group-ring grid
    (k, B, A) -> flat (k*p^n + B)*phi + A: g moves coefficients through the
    field action and sends the group index k to conj_pow * k."""
    f = FieldDescriptor(p, n)
    pn, phi = f.modulus, f.degree
    u, s = g.unit(), g.s
    zcache = {}
    rows: dict[int, dict[int, Fraction]] = defaultdict(dict)
    for k in range(pn):
        k2 = (conj_pow * k) % pn
        for B in range(pn):
            for A in range(phi):
                src = (k * pn + B) * phi + A
                e = (u * A + s * B) % pn
                if e not in zcache:
                    zcache[e] = CycloElt.zeta_power(f, e)
                for A2, c in enumerate(zcache[e].coeffs):
                    if c:
                        dst = (k2 * pn + B) * phi + A2
                        rows[dst][src] = rows[dst].get(src, Fraction(0)) + c
                rows[src][src] = rows[src].get(src, Fraction(0)) - 1
    return [{c: v for c, v in row.items() if v} for row in rows.values()
            if any(row.values())]


def h_variant(p: int, n: int, i: int, a=Fraction(2)) -> list[VariantHopfElt]:
    """Q-basis of the fixed ring (E_i[N_i])^beta, dimension (p-1)p^n over Q.

    The ring is cut out inside the full field-coefficient group ring by two
    exact kernels at once: the complement generator acting on coefficients
    only (coefficients in the fixed field), and beta acting on coefficients
    together with conjugation on the group index.
    """
    if n < 2:
        raise ValueError("descent Hopf algebras need level >= 2")
    f = FieldDescriptor(p, n)
    pn, phi = f.modulus, f.degree
    g = complement_generator(p, n, i)
    m = conjugation_exponent(p, n, i)
    rows = _twisted_rows(p, n, g, 1) + _twisted_rows(p, n, TowerAut.beta(p, n), m)
    kernel = linalg.sparse_nullspace(rows, pn * pn * phi)
    if len(kernel) != (p - 1) * pn:
        raise AssertionError("fixed ring has dimension %d, expected %d"
                             % (len(kernel), (p - 1) * pn))
    basis = []
    for vec in kernel:
        mats = [[[Fraction(0)] * phi for _ in range(pn)] for _ in range(pn)]
        for idx, v in vec.items():
            kk, rest = divmod(idx, pn * phi)
            mats[kk][rest // phi][rest % phi] = v
        basis.append(VariantHopfElt(
            p, n, i, a,
            [BigFieldElt(p, n, a, [CycloElt(f, row) for row in mat])
             for mat in mats]))
    return basis


def _hopf_to_vec(h: VariantHopfElt) -> dict[int, Fraction]:
    pn = h.p ** h.n
    phi = FieldDescriptor(h.p, h.n).degree
    vec = {}
    for k, part in enumerate(h.parts):
        for B, c in enumerate(part.coeffs):
            for A, v in enumerate(c.coeffs):
                if v:
                    vec[(k * pn + B) * phi + A] = v
    return vec


def h_variant_rank_certificate(p: int, n: int, i: int, a=Fraction(2)) -> Report:
    """Q-dimension (p-1)p^n plus closure under multiplication by zeta_1
    certifies the fixed ring as a base-field vector space of rank p^n."""
    def body():
        basis = h_variant(p, n, i, a)
        ech = linalg.SparseEchelon()
        for h in basis:
            ech.insert(_hopf_to_vec(h))
        if ech.rank != (p - 1) * p ** n:
            return False, {"q_dim": ech.rank}
        z1 = CycloElt.zeta_power(FieldDescriptor(p, n), p ** (n - 1))
        for t, h in enumerate(basis):
            if not ech.contains(_hopf_to_vec(h.scale(z1))):
                return False, {"not_zeta1_closed_at": t}
        return True, None

    return checked("variant-hopf-rank",
                   {"p": p, "n": n, "i": i, "q_dim": (p - 1) * p ** n,
                    "base_rank": p ** n}, body)


# ---------------------------------------------------------------------------
# the action on Q(zeta_1, w) and its verification

def _base_entry(n: int, c: CycloElt):
    """Read a level-n coefficient as a level-1 one; None if it is not."""
    return embed_preimage(1, n, c)


def action_matrix(h: VariantHopfElt):
    """Matrix of h on Q(zeta_1, w) over Q(zeta_1), columns indexed by w-powers;
    None if some image leaves that subfield (it never should)."""
    p, n, pn = h.p, h.n, h.p ** h.n
    rows = [[None] * pn for _ in range(pn)]
    for B in range(pn):
        img = h.apply(BigFieldElt.monomial(p, n, h.a, 0, B))
        for B2 in range(pn):
            entry = _base_entry(n, img.coeffs[B2])
            if entry is None:
                return None
            rows[B2][B] = entry
    return rows


def _matrix_q_vec(p: int, n: int, mat, z1_power: int) -> dict[int, Fraction]:
    """Flatten a base-field matrix (times zeta_1^{z1_power}) to Q-coordinates."""
    pn, deg1 = p ** n, p - 1
    vec = {}
    for B2 in range(pn):
        for B in range(pn):
            c = mat[B2][B]
            if not c:
                continue
            if z1_power:
                c = c.shift(z1_power)
            for j, v in enumerate(c.coeffs):
                if v:
                    vec[(B2 * pn + B) * deg1 + j] = v
    return vec


def variant_action_check(p: int, n: int, i: int, a=Fraction(2)) -> Report:
    """The descent Hopf algebra makes Q(zeta_1, w)/Q(zeta_1) Hopf-Galois:
    module endomorphism images span the full p^{2n}-dimensional endomorphism
    ring over the base, and the fixed space of the action is the base field."""
    def body():
        basis = h_variant(p, n, i, a)
        f = FieldDescriptor(p, n)
        pn, phi, step, deg1 = f.modulus, f.degree, p ** (n - 1), p - 1

        # the target subfield as a monomial-support subspace of the closure
        supp = {B * phi + j * step for B in range(pn) for j in range(deg1)}
        beta_fixed = linalg.sparse_nullspace(_aut_rows(p, n, TowerAut.beta(p, n)),
                                             pn * phi)
        if len(beta_fixed) != deg1 * pn:
            return False, {"stage": "subfield-dimension", "dim": len(beta_fixed)}
        for vec in beta_fixed:
            if not set(vec) <= supp:
                return False, {"stage": "subfield-support",
                               "stray": sorted(set(vec) - supp)[:4]}

        # action matrices over the base, with entries certified inside it
        mats = []
        for t, h in enumerate(basis):
            mat = action_matrix(h)
            if mat is None:
                return False, {"stage": "image-support", "basis_index": t}
            mats.append(mat)

        # counits: h(1) must be a base-field multiple of 1
        eps = []
        for t, h in enumerate(basis):
            img = h.apply(BigFieldElt.one(p, n, a))
            if any(img.coeffs[B] for B in range(1, pn)):
                return False, {"stage": "counit-support", "basis_index": t}
            e = _base_entry(n, img.coeffs[0])
            if e is None:
                return False, {"stage": "counit-value", "basis_index": t}
            eps.append(e)

        # fixed space of the action == the base field (Q-dimension p-1)
        dimq = deg1 * pn
        stacked = []
        for t, h in enumerate(basis):
            rows = defaultdict(dict)
            for B in range(pn):
                for j in range(deg1):
                    col = B * deg1 + j
                    y = BigFieldElt.monomial(p, n, a, j * step, B)
                    z = h.apply(y) - y.scale(embed(1, n, eps[t]))
                    for B2 in range(pn):
                        c = _base_entry(n, z.coeffs[B2])
                        if c is None:
                            return False, {"stage": "fixed-space-support",
                                           "basis_index": t, "w_power": B}
                        for j2, v in enumerate(c.coeffs):
                            if v:
                                rows[B2 * deg1 + j2][col] = v
            stacked.extend(dict(r) for r in rows.values() if r)
        kernel = linalg.sparse_nullspace(stacked, dimq)
        base_cols = {j for j in range(deg1)}          # w-power 0 coordinates
        if len(kernel) != deg1:
            return False, {"stage": "fixed-space-dimension", "dim": len(kernel)}
        for vec in kernel:
            if not set(vec) <= base_cols:
                return False, {"stage": "fixed-space-content"}

        # endomorphism span: left w-multiples of the action matrices fill
        # all of End over the base -- Q-rank (p-1) * p^{2n}
        ech = linalg.SparseEchelon()
        for c in range(pn):
            for mat in mats:
                shifted = [[(mat[(B2 - c) % pn][B]
                             * (a if (B2 - c) % pn + c >= pn else 1))
                            for B in range(pn)] for B2 in range(pn)]
                for j in range(deg1):
                    ech.insert(_matrix_q_vec(p, n, shifted, j))
        want = deg1 * pn * pn
        if ech.rank != want:
            return False, {"stage": "endomorphism-rank", "rank": ech.rank,
                           "expected": want}
        return True, None

    return checked("variant-action", {"p": p, "n": n, "i": i, "a": rat_str(a)},
                   body)


def distinct_action_images(p: int, n: int, a=Fraction(2)) -> Report:
    """The p Hopf algebras give pairwise different endomorphism-image spans;
    the i = 0 span is exactly the diagonal algebra, matching the level-0
    idempotent action on w-powers."""
    def body():
        pn, deg1 = p ** n, p - 1
        f1 = FieldDescriptor(p, 1)
        spans = []
        vecs_by_i = []
        for i in range(p):
            basis = h_variant(p, n, i, a)
            vecs = []
            for h in basis:
                mat = action_matrix(h)
                if mat is None:
                    return False, {"stage": "image-support", "i": i}
                vecs.extend(_matrix_q_vec(p, n, mat, j) for j in range(deg1))
            ech = linalg.SparseEchelon()
            for v in vecs:
                ech.insert(v)
            spans.append(ech)
            vecs_by_i.append(vecs)
        for i in range(p):
            for j in range(i + 1, p):
                same_dim = spans[i].rank == spans[j].rank
                mutual = (all(spans[j].contains(v) for v in vecs_by_i[i])
                          and all(spans[i].contains(v) for v in vecs_by_i[j]))
                if same_dim and mutual:
                    return False, {"stage": "coincident-spans", "pair": [i, j]}
        # i = 0 gives the diagonal algebra: e_B acts as the matrix unit E_BB
        diag = linalg.SparseEchelon()
        diag_vecs = []
        for B in range(pn):
            mat = [[CycloElt.zero(f1)] * pn for _ in range(pn)]
            mat[B][B] = CycloElt.one(f1)
            for j in range(deg1):
                v = _matrix_q_vec(p, n, mat, j)
                diag.insert(v)
                diag_vecs.append(v)
        if not (all(diag.contains(v) for v in vecs_by_i[0])
                and all(spans[0].contains(v) for v in diag_vecs)):
            return False, {"stage": "level-0-not-diagonal"}
        return True, None

    return checked("variant-action", {"p": p, "n": n, "a": rat_str(a),
                                      "check": "distinct-images"}, body)


# ---------------------------------------------------------------------------
# the level-to-level truncation on complements

def variant_nu(n: int, i: int, x: TowerAut) -> TowerAut:
    """Generator assignment between consecutive complements: the level-n
    generator of the i-th complement maps to the level n-1 one, extended
    multiplicatively.  Defined for n >= 3; the sigma-chain (i = 0) also
    makes sense from level 2 down and is allowed there."""
    if not (n >= 3 or (n == 2 and i == 0)):
        raise ValueError("truncation of complements needs level >= 3 "
                         "(level 2 only on the i = 0 chain)")
    if x.n != n:
        raise ValueError("element is not at level %d" % n)
    p = x.p
    g = complement_generator(p, n, i)
    cur = TowerAut.identity(p, n)
    for k in range(p ** n):
        if cur == x:
            return complement_generator(p, n - 1, i).pow(k)
        cur = cur.compose(g)
    raise ValueError("element is not in complement %d" % i)


def variant_nu_coeffs(p: int, n: int, i: int, coeffs: dict) -> dict:
    """The same map on abstract group-ring coefficients {k: weight} over
    powers of the complement generator: indices collapse mod p^{n-1}."""
    if not (n >= 3 or (n == 2 and i == 0)):
        raise ValueError("truncation of complements needs level >= 3 "
                         "(level 2 only on the i = 0 chain)")
    tgt = p ** (n - 1)
    out: dict[int, Fraction] = {}
    for k, w in coeffs.items():
        k2 = k % tgt
        out[k2] = out.get(k2, Fraction(0)) + Fraction(w)
    return {k: w for k, w in out.items() if w}


def variant_nu_check(p: int, n: int) -> Report:
    """The generator assignment is a well-defined surjective homomorphism on
    every complement, matches the sigma-chain for i = 0, and composes down
    the tower on the i = 0 generator."""
    def body():
        if n < 3:
            return False, {"stage": "level", "n": n}
        for i in range(p):
            g_hi = complement_generator(p, n, i)
            g_lo = complement_generator(p, n - 1, i)
            if variant_nu(n, i, g_hi) != g_lo:
                return False, {"stage": "generator", "i": i}
            # well-defined homomorphism: power k maps to power k, and the
            # kernel is exactly the index-p subgroup of top powers
            for k in (0, 1, p, p ** (n - 1), p ** (n - 1) + 1, p ** n - 1):
                if variant_nu(n, i, g_hi.pow(k)) != g_lo.pow(k):
                    return False, {"stage": "power", "i": i, "k": k}
            x, y = g_hi.pow(3), g_hi.pow(p + 1)
            if variant_nu(n, i, x.compose(y)) != \
               variant_nu(n, i, x).compose(variant_nu(n, i, y)):
                return False, {"stage": "homomorphism", "i": i}
            images = {variant_nu(n, i, g_hi.pow(k)) for k in range(p ** n)}
            if len(images) != p ** (n - 1):
                return False, {"stage": "surjectivity", "i": i}
        if variant_nu(n, 0, TowerAut.sigma(p, n)) != TowerAut.sigma(p, n - 1):
            return False, {"stage": "sigma-chain"}
        # composing down the sigma chain: level n -> n-1 -> ... -> 1
        cur: TowerAut = TowerAut.sigma(p, n)
        for lvl in range(n, 1, -1):
            cur = variant_nu(lvl, 0, cur)
        if cur != TowerAut.sigma(p, 1):
            return False, {"stage": "composite"}
        return True, None

    return checked("variant-truncation", {"p": p, "n": n,
                                          "check": "generator-assignment"}, body)


def e_containment_check(p: int, n: int, a=Fraction(2)) -> Report:
    """Containment pattern of fixed fields across consecutive tower levels.

    Only the index-0 chain nests: the level n-1 fixed field of the plain
    root-scaling generator lifts into *every* level-n complement field,
    while the twisted fixed fields (index >= 1) one level down lift into
    none of them.  The field-side containment matrix is cross-checked
    against a group-side certificate: each level-n complement restricts to
    the full root-scaling subgroup one level down (its cyclotomic
    multipliers are trivial there), so it can only fix the index-0 field.
    """
    def body():
        if n < 3:
            return False, {"stage": "level", "n": n}
        echs = []
        for j in range(p):
            ech = linalg.SparseEchelon()
            for v in fixed_field(p, n, [complement_generator(p, n, j)], a):
                ech.insert(_field_vec(v))
            echs.append(ech)
        matrix = []
        for i in range(p):
            low = fixed_field(p, n - 1, [complement_generator(p, n - 1, i)], a)
            if len(low) != (p - 1) * p ** (n - 2):
                return False, {"stage": "low-dimension", "i": i, "dim": len(low)}
            lifts = [_field_vec(field_tower_lift(n - 1, n, v)) for v in low]
            matrix.append([all(ech.contains(vec) for vec in lifts)
                           for ech in echs])
        expected = [[i == 0] * p for i in range(p)]
        if matrix != expected:
            return False, {"stage": "containment-pattern", "matrix": matrix}
        sigma_chain = {(k, 0) for k in range(p ** (n - 1))}
        for j in range(p):
            restr = {(g.s % p ** (n - 1), g.b % p ** (n - 2))
                     for g in complement_elements(p, n, j)}
            if restr != sigma_chain:
                return False, {"stage": "restriction", "j": j}
        return True, None

    return checked("variant-truncation", {"p": p, "n": n, "a": rat_str(a),
                                          "check": "fixed-field-containment"},
                   body)


def _field_vec(x: BigFieldElt) -> dict[int, Fraction]:
    phi = FieldDescriptor(x.p, x.n).degree
    vec = {}
    for B, c in enumerate(x.coeffs):
        for A, v in enumerate(c.coeffs):
            if v:
                vec[B * phi + A] = v
    return vec


def complements_report(p: int, n: int) -> Report:
    """Wrap the construction-with-verification of the p normal complements."""
    def body():
        gens = normal_complements(p, n)
        return len(gens) == p, {"count": len(gens)}

    def wrapped():
        try:
            ok, witness = body()
            return ok, (None if ok else witness)
        except (AssertionError, ValueError) as exc:
            return False, {"error": str(exc)}

    return checked("variant-complements", {"p": p, "n": n}, wrapped)
