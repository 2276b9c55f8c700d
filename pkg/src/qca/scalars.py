"""Exact base ring: fractions of Laurent polynomials in q (rational exponents)
whose coefficients are integer polynomials in coefficient variables t1, t2, ...

Everything downstream (quantum tori, mutation, scattering, theta functions)
stores its coefficients as :class:`QScalar`.  All arithmetic is exact; there
is no floating point anywhere in this package.

Internally a QScalar keeps integer q-exponent keys together with a scale L,
the actual exponent being key / L; this keeps dictionary arithmetic on fast
int keys while supporting the fractional powers q^{1/d} the formulas need.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm


# ---------------------------------------------------------------------------
# t-monomials: integer exponent tuples with trailing zeros trimmed, so that
# values built in contexts with different numbers of coefficient variables
# are directly comparable (the constant monomial is always ()).

def tmono(exponents) -> tuple[int, ...]:
    """Canonical t-monomial key: trim trailing zeros."""
    e = tuple(int(x) for x in exponents)
    while e and e[-1] == 0:
        e = e[:-1]
    if any(x < 0 for x in e):
        raise ValueError(f"t-exponents must be nonnegative, got {e}")
    return e


def _tmono_mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    if not a:
        return b
    if not b:
        return a
    n = max(len(a), len(b))
    a = a + (0,) * (n - len(a))
    b = b + (0,) * (n - len(b))
    return tmono(x + y for x, y in zip(a, b))


class TScalar:
    """Integer polynomial in the coefficient variables t1, t2, ...

    Stored as a map from canonical t-monomials to nonzero integers.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        d = {}
        if terms:
            for mono, c in terms.items():
                c = int(c)
                if c:
                    key = tmono(mono)
                    d[key] = d.get(key, 0) + c
                    if not d[key]:
                        del d[key]
        self.terms = d

    # -- constructors -----------------------------------------------------
    @staticmethod
    def integer(n: int) -> "TScalar":
        return TScalar({(): n})

    @staticmethod
    def monomial(exponents, coeff: int = 1) -> "TScalar":
        return TScalar({tmono(exponents): coeff})

    # -- predicates --------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {()}

    def constant_value(self) -> int:
        if not self.terms:
            return 0
        if set(self.terms) != {()}:
            raise ValueError(f"not a constant: {self}")
        return self.terms[()]

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other: "TScalar") -> "TScalar":
        d = dict(self.terms)
        for k, c in other.terms.items():
            v = d.get(k, 0) + c
            if v:
                d[k] = v
            elif k in d:
                del d[k]
        out = TScalar.__new__(TScalar)
        out.terms = d
        return out

    def __neg__(self) -> "TScalar":
        out = TScalar.__new__(TScalar)
        out.terms = {k: -c for k, c in self.terms.items()}
        return out

    def __sub__(self, other: "TScalar") -> "TScalar":
        return self + (-other)

    def __mul__(self, other: "TScalar") -> "TScalar":
        d = {}
        for ka, ca in self.terms.items():
            for kb, cb in other.terms.items():
                k = _tmono_mul(ka, kb)
                v = d.get(k, 0) + ca * cb
                if v:
                    d[k] = v
                elif k in d:
                    del d[k]
        out = TScalar.__new__(TScalar)
        out.terms = d
        return out

    def scale(self, n: int) -> "TScalar":
        if not n:
            return TScalar()
        out = TScalar.__new__(TScalar)
        out.terms = {k: c * n for k, c in self.terms.items()}
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, TScalar) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- structure -----------------------------------------------------------
    def content(self) -> int:
        """gcd of the integer coefficients (0 for the zero polynomial)."""
        g = 0
        for c in self.terms.values():
            g = gcd(g, c)
            if g == 1:
                return 1
        return abs(g)

    def coefficient_sum(self) -> int:
        """Value at t = 1."""
        return sum(self.terms.values())

    def t_content(self) -> tuple[int, ...]:
        """Componentwise minimum exponent over all monomials."""
        if not self.terms:
            return ()
        if () in self.terms:
            return ()
        n = max(len(k) for k in self.terms)
        mins = [None] * n
        for k in self.terms:
            padded = k + (0,) * (n - len(k))
            for i, e in enumerate(padded):
                mins[i] = e if mins[i] is None else min(mins[i], e)
        return tmono(mins)

    def divide_tmono(self, mono: tuple[int, ...]) -> "TScalar":
        if not mono:
            return self
        d = {}
        for k, c in self.terms.items():
            n = max(len(k), len(mono))
            kk = k + (0,) * (n - len(k))
            mm = mono + (0,) * (n - len(mono))
            d[tmono(x - y for x, y in zip(kk, mm))] = c
        out = TScalar.__new__(TScalar)
        out.terms = d
        return out

    def divide_int(self, n: int) -> "TScalar":
        out = TScalar.__new__(TScalar)
        out.terms = {}
        for k, c in self.terms.items():
            if c % n:
                raise ValueError(f"{n} does not divide coefficient {c}")
            out.terms[k] = c // n
        return out

    def lex_leading(self) -> tuple[tuple[int, ...], int]:
        key = min(self.terms)
        return key, self.terms[key]

    def __repr__(self):
        return f"TScalar({self.render()})"

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms):
            c = self.terms[k]
            mono = "*".join(
                f"t{i + 1}" if e == 1 else f"t{i + 1}^{e}"
                for i, e in enumerate(k) if e
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}*{mono}")
        s = parts[0]
        for p in parts[1:]:
            s += p if p.startswith("-") else "+" + p
        return s


_T_ZERO = TScalar()
_T_ONE = TScalar.integer(1)


# ---------------------------------------------------------------------------
# Laurent polynomials in u = q^{1/L} with TScalar coefficients, as plain
# dicts {int exponent: TScalar}.  Module-private helpers; QScalar wraps a
# numerator/denominator pair of these together with the scale L.

def _ql_trim(d: dict) -> dict:
    return {e: c for e, c in d.items() if c.terms}


def _ql_add(a: dict, b: dict) -> dict:
    d = dict(a)
    for e, c in b.items():
        if e in d:
            v = d[e] + c
            if v.terms:
                d[e] = v
            else:
                del d[e]
        else:
            d[e] = c
    return d


def _ql_neg(a: dict) -> dict:
    return {e: -c for e, c in a.items()}


def _ql_mul(a: dict, b: dict) -> dict:
    d = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            p = ca * cb
            if e in d:
                p = d[e] + p
            if p.terms:
                d[e] = p
            elif e in d:
                del d[e]
    return d


def _ql_rescale(a: dict, k: int) -> dict:
    if k == 1:
        return a
    return {e * k: c for e, c in a.items()}


def _ql_is_tfree(a: dict) -> bool:
    return all(c.is_constant() for c in a.values())


# -- integer univariate helpers for gcd cancellation.

def _int_poly_gcd(a: list[int], b: list[int]) -> list[int]:
    """gcd in Z[x] via primitive pseudo-remainder sequences.

    Coefficient lists are little-endian; result is primitive with positive
    leading coefficient.
    """

    def content(p):
        g = 0
        for c in p:
            g = gcd(g, c)
        return abs(g)

    def primitive(p):
        p = list(p)
        while p and p[-1] == 0:
            p.pop()
        c = content(p)
        if c > 1:
            p = [x // c for x in p]
        if p and p[-1] < 0:
            p = [-x for x in p]
        return p

    def pseudo_rem(p, q):
        p = list(p)
        dq = len(q) - 1
        lq = q[-1]
        while len(p) - 1 >= dq and p:
            dp = len(p) - 1
            lp = p[-1]
            p = [c * lq for c in p]
            for i, c in enumerate(q):
                p[dp - dq + i] -= lp * c
            while p and p[-1] == 0:
                p.pop()
        return p

    a, b = primitive(a), primitive(b)
    if not a:
        return b
    if not b:
        return a
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = primitive(pseudo_rem(a, b))
        a, b = b, r
    return primitive(a)


def _int_poly_divmod(a: list[int], b: list[int]):
    """Exact-division-oriented divmod in Z[x]; returns (quot, rem) or None if
    a leading coefficient fails to divide."""
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    q = [0] * max(0, len(a) - db)
    while len(a) - 1 >= db and a:
        la = a[-1]
        if la % lb:
            return None
        f = la // lb
        q[len(a) - 1 - db] = f
        for i, c in enumerate(b):
            a[len(a) - 1 - db + i] -= f * c
        while a and a[-1] == 0:
            a.pop()
    return q, a


class QScalar:
    """Exact element of the fraction field of Laurent polynomials in q over
    Z[t1, ..., tr].

    The representation is a normalized numerator/denominator pair over
    integer exponents of u = q^{1/scale}: the denominator has minimal
    exponent 0, num and den share no t-monomial or integer content,
    nontrivial t-free denominators are reduced by a polynomial gcd, and the
    denominator's trailing coefficient is positive.  Engine-produced equal
    values compare equal structurally; ``__eq__`` nevertheless
    cross-multiplies, so equality is exact regardless.
    """

    __slots__ = ("num", "den", "scale")

    # PRS gcd cost explodes on very high degree polynomials; past this bound
    # the fraction is kept unreduced (still exact, equality by cross-multiply).
    _GCD_DEGREE_CAP = 96

    def __init__(self, num=None, den=None, scale: int = 1):
        """num/den: {Fraction or int exponent: TScalar} when scale == 1,
        or {int key: TScalar} with exponent key/scale."""
        if num is None:
            num = {}
        if den is None:
            den = {0: _T_ONE}
        if scale == 1:
            num, scale_n = _to_scaled(num)
            den, scale_d = _to_scaled(den)
            L = lcm(scale_n, scale_d)
            num = _ql_rescale(num, L // scale_n)
            den = _ql_rescale(den, L // scale_d)
            scale = L
        self.num, self.den, self.scale = self._normalize(num, den, scale)

    @staticmethod
    def _raw(num: dict, den: dict, scale: int) -> "QScalar":
        out = QScalar.__new__(QScalar)
        out.num, out.den, out.scale = QScalar._normalize(num, den, scale)
        return out

    # -- constructors ------------------------------------------------------
    @staticmethod
    def integer(n: int) -> "QScalar":
        out = QScalar.__new__(QScalar)
        if n:
            out.num, out.den, out.scale = {0: TScalar.integer(n) if n != 1 else _T_ONE}, {0: _T_ONE}, 1
        else:
            out.num, out.den, out.scale = {}, {0: _T_ONE}, 1
        return out

    @staticmethod
    def rational(p: int, q: int) -> "QScalar":
        return QScalar._raw({0: TScalar.integer(p)}, {0: TScalar.integer(q)}, 1)

    @staticmethod
    def q_power(e) -> "QScalar":
        e = Fraction(e)
        return QScalar._raw({e.numerator: _T_ONE}, {0: _T_ONE}, e.denominator)

    @staticmethod
    def t_monomial(exponents, coeff: int = 1) -> "QScalar":
        return QScalar._raw({0: TScalar.monomial(exponents, coeff)}, {0: _T_ONE}, 1)

    @staticmethod
    def term(qexp, texp, coeff: int = 1) -> "QScalar":
        """coeff * q^qexp * t^texp"""
        e = Fraction(qexp)
        return QScalar._raw({e.numerator: TScalar.monomial(texp, coeff)},
                            {0: _T_ONE}, e.denominator)

    # -- normalization ------------------------------------------------------
    @staticmethod
    def _normalize(num: dict, den: dict, scale: int):
        num = _ql_trim(num)
        den = _ql_trim(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            return {}, {0: _T_ONE}, 1

        # reduce the scale
        g = scale
        for e in num:
            g = gcd(g, e)
            if g == 1:
                break
        if g != 1:
            for e in den:
                g = gcd(g, e)
                if g == 1:
                    break
        if g > 1:
            num = {e // g: c for e, c in num.items()}
            den = {e // g: c for e, c in den.items()}
            scale //= g

        # fast path: denominator exactly 1 needs no content/gcd/sign work
        if len(den) == 1:
            d0 = den.get(0)
            if d0 is not None and d0.terms.get(()) == 1 and len(d0.terms) == 1:
                return num, den, scale

        # common t-monomial content
        tc_all = None
        for part in (num, den):
            for c in part.values():
                tc = c.t_content()
                if tc_all is None:
                    tc_all = tc
                else:
                    n = max(len(tc_all), len(tc))
                    a = tc_all + (0,) * (n - len(tc_all))
                    b = tc + (0,) * (n - len(tc))
                    tc_all = tmono(min(x, y) for x, y in zip(a, b))
                if not tc_all:
                    break
            if not tc_all:
                break
        if tc_all:
            num = {e: c.divide_tmono(tc_all) for e, c in num.items()}
            den = {e: c.divide_tmono(tc_all) for e, c in den.items()}

        # anchor denominator at exponent 0
        shift = min(den)
        if shift:
            num = {e - shift: c for e, c in num.items()}
            den = {e - shift: c for e, c in den.items()}

        # integer content
        g = 0
        for part in (num, den):
            for c in part.values():
                g = gcd(g, c.content())
                if g == 1:
                    break
            if g == 1:
                break
        if g > 1:
            num = {e: c.divide_int(g) for e, c in num.items()}
            den = {e: c.divide_int(g) for e, c in den.items()}

        # polynomial gcd when the denominator is a nontrivial t-free poly
        if len(den) > 1 and _ql_is_tfree(den):
            num, den = QScalar._cancel_poly_gcd(num, den)

        # positive trailing coefficient of the denominator
        e0 = min(den)
        _, lead = den[e0].lex_leading()
        if lead < 0:
            num = _ql_neg(num)
            den = _ql_neg(den)
        return num, den, scale

    @staticmethod
    def _cancel_poly_gcd(num: dict, den: dict):
        deg_den = max(den)
        num_min = min(num)
        if deg_den > QScalar._GCD_DEGREE_CAP or \
                max(num) - num_min > QScalar._GCD_DEGREE_CAP:
            return num, den
        den_int = {e: c.constant_value() for e, c in den.items()}
        den_list = [den_int.get(i, 0) for i in range(deg_den + 1)]

        # slice the numerator per t-monomial, offset by its minimal exponent
        slices: dict[tuple[int, ...], dict[int, int]] = {}
        for e, c in num.items():
            for k, cc in c.terms.items():
                slices.setdefault(k, {})[e - num_min] = cc
        g = den_list
        for sl in slices.values():
            deg = max(sl)
            g = _int_poly_gcd(g, [sl.get(i, 0) for i in range(deg + 1)])
            if len(g) <= 1:
                return num, den
        if len(g) <= 1:
            return num, den

        def div(poly_dict, offset):
            deg = max(poly_dict)
            res = _int_poly_divmod([poly_dict.get(i, 0) for i in range(deg + 1)], g)
            if res is None or res[1]:
                return None
            q, _ = res
            return {offset + i: q[i] for i in range(len(q)) if q[i]}

        new_den_int = div(den_int, 0)
        if new_den_int is None:
            return num, den
        new_slices = {}
        for k, sl in slices.items():
            r = div(sl, num_min)
            if r is None:
                return num, den
            new_slices[k] = r
        new_num: dict[int, TScalar] = {}
        for k, sl in new_slices.items():
            for e, cc in sl.items():
                cur = new_num.get(e)
                add = TScalar({k: cc})
                new_num[e] = (cur + add) if cur is not None else add
        new_den = {e: TScalar.integer(c) for e, c in new_den_int.items()}
        # re-anchor (division can shift the trailing exponent)
        shift = min(new_den)
        if shift:
            new_num = {e - shift: c for e, c in new_num.items()}
            new_den = {e - shift: c for e, c in new_den.items()}
        return _ql_trim(new_num), new_den

    # -- predicates ----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.num

    def is_one(self) -> bool:
        return self.num == self.den

    def is_polynomial(self) -> bool:
        return self.den == {0: _T_ONE}

    def is_monomial(self) -> bool:
        """Single term c * q^e * t^mono over an integer denominator."""
        return len(self.num) == 1 and len(self.den) == 1 and all(
            len(c.terms) == 1 for c in self.num.values()
        ) and all(c.is_constant() for c in self.den.values())

    # -- arithmetic -----------------------------------------------------------
    def _aligned(self, other: "QScalar"):
        L = self.scale if self.scale == other.scale else lcm(self.scale, other.scale)
        ka, kb = L // self.scale, L // other.scale
        return (_ql_rescale(self.num, ka), _ql_rescale(self.den, ka),
                _ql_rescale(other.num, kb), _ql_rescale(other.den, kb), L)

    def __add__(self, other):
        other = _coerce(other)
        na, da, nb, db, L = self._aligned(other)
        if da == db:
            return QScalar._raw(_ql_add(na, nb), da, L)
        return QScalar._raw(_ql_add(_ql_mul(na, db), _ql_mul(nb, da)),
                            _ql_mul(da, db), L)

    __radd__ = __add__

    def __neg__(self):
        return QScalar._raw(_ql_neg(self.num), dict(self.den), self.scale)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        na, da, nb, db, L = self._aligned(other)
        return QScalar._raw(_ql_mul(na, nb), _ql_mul(da, db), L)

    __rmul__ = __mul__

    def inverse(self) -> "QScalar":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return QScalar._raw(dict(self.den), dict(self.num), self.scale)

    def __truediv__(self, other):
        return self * _coerce(other).inverse()

    def __rtruediv__(self, other):
        return _coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = QScalar.integer(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, (QScalar, int)):
            return NotImplemented
        other = _coerce(other)
        if self.scale == other.scale and self.num == other.num and self.den == other.den:
            return True
        na, da, nb, db, _ = self._aligned(other)
        return _ql_mul(na, db) == _ql_mul(nb, da)

    def __hash__(self):
        raise TypeError("QScalar is not hashable")

    # -- involution and specializations ---------------------------------------
    def bar(self) -> "QScalar":
        """q -> q^{-1}, t fixed."""
        return QScalar._raw(_ql_neg_exp(self.num), _ql_neg_exp(self.den), self.scale)

    def subs_t_one(self) -> "QScalar":
        return QScalar._raw(_ql_tsub_one(self.num), _ql_tsub_one(self.den), self.scale)

    def map_q_exponents(self, f) -> "QScalar":
        """Apply a relabeling e -> f(e) to every q-exponent (e a Fraction)."""
        num: dict[Fraction, TScalar] = {}
        for e, c in self.num.items():
            e2 = Fraction(f(Fraction(e, self.scale)))
            num[e2] = num[e2] + c if e2 in num else c
        den: dict[Fraction, TScalar] = {}
        for e, c in self.den.items():
            e2 = Fraction(f(Fraction(e, self.scale)))
            den[e2] = den[e2] + c if e2 in den else c
        return QScalar(num, den)

    def _q1_order(self, part: dict) -> int:
        """Order of vanishing at q=1 (u=1 in integer exponents)."""
        if not part:
            raise ValueError("zero polynomial has no q=1 order")
        emin = min(part)
        work = {e - emin: c for e, c in part.items()}
        order = 0
        while True:
            if not _value_at_one(work).is_zero():
                return order
            work = _divide_by_u_minus_1(work)
            order += 1

    def limit_q1(self) -> TScalar:
        """Exact evaluation at q = 1 (every q-power goes to 1).

        Raises QPoleError carrying the pole order if the value has a pole at
        q = 1, and ValueError if the finite limit is not an integer
        polynomial in t.
        """
        if self.is_zero():
            return TScalar()
        on = self._q1_order(self.num)
        od = self._q1_order(self.den)
        if on < od:
            raise QPoleError(od - on)
        nw = {e - min(self.num): c for e, c in self.num.items()}
        dw = {e: c for e, c in self.den.items()}
        for _ in range(od):
            nw = _divide_by_u_minus_1(nw)
            dw = _divide_by_u_minus_1(dw)
        nv = _value_at_one(nw)
        if on > od:
            return TScalar()
        dv = _value_at_one(dw)
        if dv.is_constant():
            return nv.divide_int(dv.constant_value())
        raise ValueError(f"q=1 limit is not polynomial in t: {self.render()}")

    def limit_q1_pair(self) -> tuple[TScalar, TScalar]:
        """Exact q=1 limit as a ratio of t-polynomials (num, den)."""
        if self.is_zero():
            return TScalar(), _T_ONE
        on = self._q1_order(self.num)
        od = self._q1_order(self.den)
        if on < od:
            raise QPoleError(od - on)
        nw = {e - min(self.num): c for e, c in self.num.items()}
        dw = dict(self.den)
        for _ in range(od):
            nw = _divide_by_u_minus_1(nw)
            dw = _divide_by_u_minus_1(dw)
        if on > od:
            return TScalar(), _T_ONE
        return _value_at_one(nw), _value_at_one(dw)

    def divide_exact_qminus1(self) -> "QScalar":
        """Return self / (q - 1); requires self to vanish at q = 1."""
        if self.is_zero():
            return self
        if self._q1_order(self.num) - self._q1_order(self.den) < 1:
            raise ValueError("value does not vanish at q = 1")
        qm1 = {self.scale: _T_ONE, 0: TScalar.integer(-1)}
        return QScalar._raw(dict(self.num), _ql_mul(self.den, qm1), self.scale)

    # -- rendering -------------------------------------------------------------
    def render(self, base: str = "q") -> str:
        if self.is_zero():
            return "0"
        n = _render_laurent(self.num, self.scale, base)
        if self.is_polynomial():
            return n
        d = _render_laurent(self.den, self.scale, base)
        if len(self.num) > 1 or any(len(c.terms) > 1 for c in self.num.values()):
            n = f"({n})"
        if len(self.den) > 1 or any(len(c.terms) > 1 for c in self.den.values()):
            d = f"({d})"
        return f"{n}/{d}"

    def render_v(self) -> str:
        """Render with v = q^{-1/2} as the display unit (BZ-side tori)."""
        return self.map_q_exponents(lambda e: -2 * e).render(base="v")

    def __repr__(self):
        return f"QScalar({self.render()})"


class QPoleError(ArithmeticError):
    """Raised when a q=1 limit hits a pole; carries the pole order."""

    def __init__(self, order: int):
        super().__init__(f"pole of order {order} at q = 1")
        self.order = order


def _to_scaled(part: dict) -> tuple[dict, int]:
    """{Fraction or int: TScalar} -> ({int: TScalar}, scale)."""
    L = 1
    for e in part:
        if isinstance(e, Fraction):
            L = lcm(L, e.denominator)
    if L == 1:
        return ({int(e): c for e, c in part.items()}, 1)
    return ({int(e * L): c for e, c in part.items()}, L)


def _ql_neg_exp(a: dict) -> dict:
    return {-e: c for e, c in a.items()}


def _ql_tsub_one(a: dict) -> dict:
    out = {}
    for e, c in a.items():
        v = c.coefficient_sum()
        if v:
            t = TScalar.integer(v)
            out[e] = out[e] + t if e in out else t
    return _ql_trim(out)


def _value_at_one(part: dict) -> TScalar:
    v = _T_ZERO
    for c in part.values():
        v = v + c
    return v


def _divide_by_u_minus_1(part: dict[int, TScalar]) -> dict[int, TScalar]:
    """Synthetic division of sum c_i u^i by (u - 1); assumes exact."""
    deg = max(part)
    quot: dict[int, TScalar] = {}
    carry = _T_ZERO
    for i in range(deg, 0, -1):
        carry = carry + part.get(i, _T_ZERO)
        if carry.terms:
            quot[i - 1] = carry
    return quot


def _render_laurent(part: dict, scale: int, base: str) -> str:
    pieces = []
    for k in sorted(part):
        c = part[k]
        e = Fraction(k, scale)
        if e == 0:
            pieces.append(c.render())
            continue
        if e.denominator == 1:
            pw = f"{base}" if e == 1 else f"{base}^{e}"
        else:
            pw = f"{base}^{{{e}}}"
        cs = c.render()
        if cs == "1":
            pieces.append(pw)
        elif cs == "-1":
            pieces.append(f"-{pw}")
        elif "+" in cs[1:] or "-" in cs[1:]:
            pieces.append(f"({cs})*{pw}")
        else:
            pieces.append(f"{cs}*{pw}")
    s = pieces[0]
    for p in pieces[1:]:
        s += p if p.startswith("-") else "+" + p
    return s


def _coerce(x) -> QScalar:
    if isinstance(x, QScalar):
        return x
    if isinstance(x, int):
        return QScalar.integer(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to QScalar")


ZERO = QScalar()
ONE = QScalar.integer(1)


def qpow(e) -> QScalar:
    """q^e for an integer or Fraction exponent."""
    return QScalar.q_power(Fraction(e))


def vpow(e) -> QScalar:
    """v^e with v = q^{-1/2}, the display unit of Berenstein-Zelevinsky tori."""
    return QScalar.q_power(Fraction(-e, 2))


def tvar(i: int) -> QScalar:
    """The coefficient variable t_{i+1} (0-indexed)."""
    exps = [0] * (i + 1)
    exps[i] = 1
    return QScalar.t_monomial(exps)


def tpow(vec) -> QScalar:
    """t^vec for a vector of (possibly negative) integer exponents: negative
    entries go to the denominator."""
    pos = [max(int(x), 0) for x in vec]
    neg = [max(-int(x), 0) for x in vec]
    out = QScalar.t_monomial(pos)
    if any(neg):
        out = out / QScalar.t_monomial(neg)
    return out
