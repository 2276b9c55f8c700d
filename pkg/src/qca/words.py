"""Skew-field elements as ordered factor words, and truncated expansions.

A :class:`FactoredWord` is a central scalar prefix times an ordered product
of atoms P^{+1} or P^{-1}, where each P is a finite quantum-torus element.
Words are closed under multiplication, inversion, the *-involution, and
conjugation by quantum dilogarithms (the finite-product formulas), which is
everything quantum mutation needs.

Equality of words is decided by expanding w1 * w2^{-1} as a truncated series
in a graded completion and comparing with 1; the grading is any integer
functional that separates the exponents inside every inverted atom.
"""

from __future__ import annotations

from fractions import Fraction

from .qtorus import QTorusElement, SkewLattice, vec, vec_add, vec_neg
from .scalars import ONE, QScalar, qpow


class ExpansionError(ValueError):
    """An atom cannot be inverted in the chosen completion."""


def degree(dvec, n) -> int:
    return sum(a * b for a, b in zip(dvec, n))


class Series:
    """Truncated element of a graded completion of the quantum torus.

    ``terms`` maps exponents to QScalar coefficients; the series is exact on
    all degrees <= ``cutoff`` (cutoff None means the element is exact).
    """

    __slots__ = ("algebra", "dvec", "cutoff", "terms")

    def __init__(self, algebra: SkewLattice, dvec, cutoff, terms):
        self.algebra = algebra
        self.dvec = tuple(dvec)
        self.cutoff = cutoff
        if cutoff is not None:
            terms = {n: c for n, c in terms.items() if degree(self.dvec, n) <= cutoff}
        self.terms = {n: c for n, c in terms.items() if not c.is_zero()}

    @staticmethod
    def from_element(elem: QTorusElement, dvec, cutoff=None) -> "Series":
        return Series(elem.algebra, dvec, cutoff, dict(elem.terms))

    @staticmethod
    def one(algebra: SkewLattice, dvec, cutoff=None) -> "Series":
        return Series(algebra, dvec, cutoff, {algebra.zero(): ONE})

    def is_zero(self) -> bool:
        return not self.terms

    def min_degree(self):
        if not self.terms:
            return None
        return min(degree(self.dvec, n) for n in self.terms)

    def truncate(self, cutoff) -> "Series":
        if self.cutoff is not None and self.cutoff <= cutoff:
            return self
        return Series(self.algebra, self.dvec, cutoff, self.terms)

    def __add__(self, other: "Series") -> "Series":
        cut = _min_cut(self.cutoff, other.cutoff)
        d = dict(self.terms)
        for n, c in other.terms.items():
            c = d[n] + c if n in d else c
            if c.is_zero():
                d.pop(n, None)
            else:
                d[n] = c
        return Series(self.algebra, self.dvec, cut, d)

    def __neg__(self) -> "Series":
        return Series(self.algebra, self.dvec, self.cutoff,
                      {n: -c for n, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: QScalar) -> "Series":
        return Series(self.algebra, self.dvec, self.cutoff,
                      {n: cv * c for n, cv in self.terms.items()})

    def __mul__(self, other: "Series") -> "Series":
        alg = self.algebra
        m1, m2 = self.min_degree(), other.min_degree()
        if (m1 is None and self.cutoff is None) or (m2 is None and other.cutoff is None):
            return Series(alg, self.dvec, None, {})  # exact zero factor
        # unknown terms come from error1*known2, known1*error2, error1*error2
        cands = []
        if self.cutoff is not None:
            if m2 is not None:
                cands.append(self.cutoff + m2)
            if other.cutoff is not None:
                cands.append(self.cutoff + other.cutoff)
        if other.cutoff is not None and m1 is not None:
            cands.append(other.cutoff + m1)
        cut = min(cands) if cands else None
        if m1 is None or m2 is None:
            return Series(alg, self.dvec, cut, {})
        zero_form = alg.zero_form
        left = [(n, degree(self.dvec, n), c) for n, c in self.terms.items()]
        right = [(m, degree(self.dvec, m), c) for m, c in other.terms.items()]
        qcache: dict = {}
        d: dict[tuple, QScalar] = {}
        for n, dn, cn in left:
            for m, dm, cm in right:
                if cut is not None and dn + dm > cut:
                    continue
                k = vec_add(n, m)
                c = cn * cm
                if not zero_form:
                    w = alg.omega(n, m)
                    if w:
                        qw = qcache.get(w)
                        if qw is None:
                            qw = qcache[w] = qpow(w)
                        c = c * qw
                c = d[k] + c if k in d else c
                if c.is_zero():
                    d.pop(k, None)
                else:
                    d[k] = c
        return Series(alg, self.dvec, cut, d)

    def inverse(self, rel_order: int, what: str = "series") -> "Series":
        """Geometric-series inverse, exact to relative order ``rel_order``.

        Requires a unique minimal-degree term (the invertible leading
        monomial of the completion)."""
        if not self.terms:
            raise ExpansionError(f"cannot invert zero {what}")
        mdeg = self.min_degree()
        anchors = [n for n in self.terms if degree(self.dvec, n) == mdeg]
        if len(anchors) > 1:
            raise ExpansionError(
                f"no unique leading monomial in {what}: "
                f"degree-{mdeg} exponents {sorted(anchors)}")
        n0 = anchors[0]
        c0 = self.terms[n0]
        # M^{-1} with M = c0 X^{n0} (the scalar is central)
        minv = Series(self.algebra, self.dvec, None, {vec_neg(n0): c0.inverse()})
        t = (minv * self) - Series.one(self.algebra, self.dvec)
        t = t.truncate(rel_order)
        out = Series.one(self.algebra, self.dvec, rel_order)
        power = Series.one(self.algebra, self.dvec, rel_order)
        sign = -1
        tmin = t.min_degree()
        if tmin is not None and tmin <= 0:
            raise ExpansionError(
                f"remainder of {what} is not positively graded (degree {tmin})")
        j = 1
        while tmin is not None and j * tmin <= rel_order:
            power = (power * t).truncate(rel_order)
            if power.is_zero():
                break
            out = out + (power.scale(QScalar.integer(sign)) if sign < 0 else power)
            sign = -sign
            j += 1
        return out * minv

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        if self.terms.keys() != other.terms.keys():
            return False
        return all(self.terms[n] == other.terms[n] for n in self.terms)

    def __hash__(self):
        raise TypeError("Series is not hashable")

    def coefficient(self, n) -> QScalar:
        return self.terms.get(vec(n), QScalar.integer(0))

    def as_element(self) -> QTorusElement:
        return QTorusElement(self.algebra, dict(self.terms))

    def __repr__(self):
        return f"Series({self.as_element().render()}; cutoff={self.cutoff})"


def _min_cut(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


class FactoredWord:
    """prefix * product of atoms (P, sign) with P a torus element, sign ±1."""

    __slots__ = ("algebra", "prefix", "atoms")

    def __init__(self, algebra: SkewLattice, prefix: QScalar = ONE, atoms=()):
        self.algebra = algebra
        self.prefix = prefix
        self.atoms = tuple(atoms)
        for p, s in self.atoms:
            if s not in (1, -1):
                raise ValueError("atom powers must be ±1")
            if p.is_zero():
                raise ValueError("zero atom")

    # -- constructors -------------------------------------------------------
    @staticmethod
    def one(algebra: SkewLattice) -> "FactoredWord":
        return FactoredWord(algebra)

    @staticmethod
    def monomial(algebra: SkewLattice, n, coeff: QScalar = ONE) -> "FactoredWord":
        return FactoredWord(algebra, coeff,
                            ((QTorusElement.monomial(algebra, n), 1),))

    @staticmethod
    def from_element(elem: QTorusElement, power: int = 1) -> "FactoredWord":
        return FactoredWord(elem.algebra, ONE, ((elem, power),))

    # -- algebra ---------------------------------------------------------------
    def __mul__(self, other: "FactoredWord") -> "FactoredWord":
        if isinstance(other, (QScalar, int)):
            return self.scale(other)
        return FactoredWord(self.algebra, self.prefix * other.prefix,
                            self.atoms + other.atoms)

    def __rmul__(self, other):
        if isinstance(other, (QScalar, int)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c) -> "FactoredWord":
        if isinstance(c, int):
            c = QScalar.integer(c)
        return FactoredWord(self.algebra, self.prefix * c, self.atoms)

    def inverse(self) -> "FactoredWord":
        return FactoredWord(self.algebra, self.prefix.inverse(),
                            tuple((p, -s) for p, s in reversed(self.atoms)))

    def star(self) -> "FactoredWord":
        """*-involution: antiautomorphism, so atoms reverse."""
        return FactoredWord(self.algebra, self.prefix.bar(),
                            tuple((p.star(), s) for p, s in reversed(self.atoms)))

    def map_scalars(self, f) -> "FactoredWord":
        return FactoredWord(self.algebra, f(self.prefix),
                            tuple((p.map_terms(lambda n, c: f(c)), s) for p, s in self.atoms))

    def transport(self, algebra: SkewLattice, expmap, scalarmap) -> "FactoredWord":
        """Monomial-level algebra map: exponents through ``expmap``, scalar
        coefficients through ``scalarmap`` (used by the p* homomorphism)."""
        atoms = []
        for p, s in self.atoms:
            atoms.append((QTorusElement(
                algebra, {vec(expmap(n)): scalarmap(c) for n, c in p.terms.items()}), s))
        return FactoredWord(algebra, scalarmap(self.prefix), atoms)

    # -- dilogarithm conjugation ----------------------------------------------
    def conjugate_by_dilog(self, h: Fraction, coeff: QScalar, direction,
                           action: int = 1) -> "FactoredWord":
        """Ad^{action} of Psi_{q^h}(coeff * X^direction) applied to the word.

        action=+1 is x -> Psi x Psi^{-1} (the mutation automorphism mu#);
        action=-1 is x -> Psi^{-1} x Psi (how scattering walls act).
        """
        alg = self.algebra
        w = vec(direction)
        out_atoms = []
        prefix = self.prefix
        for p, s in self.atoms:
            piece = _conjugate_element(alg, p, h, coeff, w, action)
            if s == -1:
                piece = piece.inverse()
            prefix = prefix * piece.prefix
            out_atoms.extend(piece.atoms)
        return FactoredWord(alg, prefix, out_atoms)

    # -- expansion ----------------------------------------------------------------
    def expand(self, dvec, order: int) -> Series:
        """Truncated series expansion, exact to relative order ``order``."""
        out = Series.one(self.algebra, dvec).scale(self.prefix)
        anchor = 0
        for p, s in self.atoms:
            fact = Series.from_element(p, dvec)
            fmin = fact.min_degree()
            if s == -1:
                fact = fact.inverse(order, what=p.render())
                fmin = -fmin
            out = (out * fact).truncate(anchor + fmin + order)
            anchor += fmin
        return out

    def inversion_difference_vectors(self):
        """Exponent differences inside inverted atoms; any valid grading must
        be nonzero on these (and positive on remainder directions)."""
        diffs = []
        for p, s in self.atoms:
            if s == -1 and len(p.terms) > 1:
                exps = sorted(p.terms)
                base = exps[0]
                for e in exps[1:]:
                    diffs.append(tuple(a - b for a, b in zip(e, base)))
        return diffs

    def tidy(self) -> "FactoredWord":
        """Merge adjacent single-term atoms into one monomial per run and
        fold their scalars into the prefix; semantics unchanged."""
        alg = self.algebra
        prefix = self.prefix
        atoms: list = []
        pending = None  # accumulated monomial exponent

        def flush():
            nonlocal pending
            if pending is not None and pending != alg.zero():
                atoms.append((QTorusElement.monomial(alg, pending), 1))
            pending = None

        for p, s in self.atoms:
            if len(p.terms) == 1:
                n, c = p.monomial_parts()
                if s == -1:
                    n, c = vec_neg(n), c.inverse()
                if pending is None:
                    pending = n
                    prefix = prefix * c
                else:
                    prefix = prefix * c * qpow(alg.omega(pending, n))
                    pending = vec_add(pending, n)
            else:
                flush()
                atoms.append((p, s))
        flush()
        return FactoredWord(alg, prefix, atoms)

    # -- misc -----------------------------------------------------------------------
    def render(self, base: str = "q") -> str:
        if self.prefix.is_zero():
            return "0"
        parts = []
        if not self.prefix.is_one():
            parts.append(self.prefix.render(base))
        for p, s in self.atoms:
            inner = p.render(base)
            if len(p.terms) == 1 and s == 1:
                parts.append(inner)
            else:
                parts.append(f"({inner})" + ("^-1" if s == -1 else ""))
        return "*".join(parts) if parts else "1"

    def __repr__(self):
        return f"FactoredWord({self.render()})"


def _dilog_factor_word(alg: SkewLattice, h: Fraction, coeff: QScalar, w,
                       exp_sign: int, power: int, count: int) -> FactoredWord:
    """Product of count factors (1 + Q^{exp_sign (2l-1)} y)^{power} with
    y = coeff * X^w and Q = q^h.  The factors commute pairwise."""
    atoms = []
    one = QTorusElement.one(alg)
    for ell in range(1, count + 1):
        e = exp_sign * (2 * ell - 1)
        binom = one + QTorusElement.monomial(alg, w, coeff * qpow(h * e))
        atoms.append((binom, power))
    return FactoredWord(alg, ONE, atoms)


def dilog_conjugation_factors(alg: SkewLattice, u: int, coeff: QScalar,
                              direction, h: Fraction) -> FactoredWord:
    """Finite product implementing Psi^{-1} A^m Psi = (this word) * A^m on a
    monomial with pairing value ``u``: the empty word for u=0,
    (1+Qy)...(1+Q^{2u-1}y) for u>0 and (1+Q^{-1}y)^{-1}...(1+Q^{1-2|u|}y)^{-1}
    for u<0, with y = coeff X^dir and Q = q^h.  This is the left-multiplied
    normal form; the engine's right-multiplied conjugation carries the
    opposite q-exponent signs, the two being equal after commuting past A^m.
    """
    s = 1 if u > 0 else -1
    return _dilog_factor_word(alg, h, coeff, vec(direction), s, s, abs(u))


def _conjugate_element(alg: SkewLattice, p: QTorusElement, h: Fraction,
                       coeff: QScalar, w, action: int) -> FactoredWord:
    """Ad^{action}_{Psi_{q^h}(coeff X^w)}(p) as a word.

    For a monomial X^v with pairing p_v = omega(w, v)/h (an integer), the
    conjugate is X^v * prod_{l<=|p_v|} (1 + Q^{sgn(p_v)(2l-1)} y)^{action sgn(p_v)}.
    A general p is split as X^{v0} * (X^{-v0} p) with v0 chosen so that the
    shifted part conjugates to an honest polynomial (all atom powers +1).
    """
    pairings = {}
    for v in p.terms:
        pv = alg.omega(w, v) / h
        if pv.denominator != 1:
            raise ValueError(
                f"non-integral dilogarithm pairing {pv} for exponent {v}")
        pairings[v] = int(pv)
    if action == 1:
        v0 = min(pairings, key=lambda v: (pairings[v], v))
    else:
        v0 = max(pairings, key=lambda v: (pairings[v], tuple(-x for x in v)))
    p0 = pairings[v0]

    s0 = 1 if p0 > 0 else -1
    factors = _dilog_factor_word(alg, h, coeff, w, s0, action * s0, abs(p0))
    head = FactoredWord.monomial(alg, v0) * factors

    shifted = QTorusElement.monomial(alg, vec_neg(v0)) * p
    if shifted.is_monomial():
        n, c = shifted.monomial_parts()
        if n == alg.zero():
            return head.scale(c)
    tail = QTorusElement(alg, {})
    one = QTorusElement.one(alg)
    for v, c in shifted.terms.items():
        pv = int(alg.omega(w, v) / h)
        assert action * pv >= 0  # anchor choice guarantees polynomial factors
        sv = 1 if pv > 0 else -1
        piece = QTorusElement.monomial(alg, v, c)
        for ell in range(1, abs(pv) + 1):
            binom = one + QTorusElement.monomial(alg, w, coeff * qpow(h * sv * (2 * ell - 1)))
            piece = piece * binom
        tail = tail + piece
    return head * FactoredWord.from_element(tail)


def choose_grading(words, rank: int) -> tuple[int, ...]:
    """Deterministically pick an integer grading that is nonzero on every
    exponent difference appearing inside an inverted atom."""
    diffs = []
    for w in words:
        diffs.extend(w.inversion_difference_vectors())
    diffs = [d for d in diffs if any(d)]
    candidates = [tuple(1 for _ in range(rank))]
    for k in (2, 3, 5, 7, 11, 17, 29):
        for i in range(rank):
            candidates.append(tuple(k if j == i else 1 for j in range(rank)))
    # last resort: geometric weights are nonzero on any nonzero small vector
    candidates.append(tuple(97 ** i for i in range(rank)))
    for cand in candidates:
        if all(degree(cand, d) != 0 for d in diffs):
            return cand
    raise ExpansionError("could not find a separating grading")


def words_equal(w1: FactoredWord, w2: FactoredWord, order: int = 12,
                dvec=None) -> bool:
    """True iff expand(w1 * w2^{-1}) equals 1 up to the given relative order."""
    if w1.algebra != w2.algebra:
        raise ValueError("words live on different algebras")
    prod = w1 * w2.inverse()
    if dvec is None:
        dvec = choose_grading([prod], w1.algebra.rank)
    series = prod.expand(dvec, order).truncate(order)
    return series == Series.one(w1.algebra, dvec, order)
