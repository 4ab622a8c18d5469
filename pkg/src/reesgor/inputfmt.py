"""Line-oriented input documents and flat key-value reports.

Grammar (one directive per line, blank lines and #-comments ignored):

    ring <name>
    char <p>            (0 means exact rationals)
    vars x:2 y:1 ...
    ideal f1, f2, ...
    params p1, p2
    power <n>

Polynomial expressions use + - * ^ with integer coefficients and
parentheses.  Parse errors carry 1-based line and column positions.
"""

from .errors import InputError
from .fields import DEFAULT_PRIME, GF, QQ
from .polys import PolyRing
from . import rings


class InputDocument:
    def __init__(self):
        self.name = None
        self.char = DEFAULT_PRIME
        self.vars = []            # list of (name, weight)
        self.ideal_exprs = []     # raw strings, kept for round-tripping
        self.param_exprs = []
        self.power = None
        self.ideal_lines = []     # source line per expression, when parsed
        self.param_lines = []

    def build(self, char_override=None):
        """Materialize (PresentedGradedRing, q: Ideal, power or None)."""
        if not self.vars:
            raise InputError("no vars directive")
        char = self.char if char_override is None else char_override
        field = QQ if char == 0 else GF(char)
        names = tuple(n for n, _ in self.vars)
        weights = tuple(w for _, w in self.vars)
        ambient = PolyRing(names, weights, field)
        ideal_gens = [parse_poly(e, ambient, line=ln)
                      for e, ln in zip(self.ideal_exprs,
                                       self.ideal_lines or
                                       [None] * len(self.ideal_exprs))]
        A = rings.PresentedGradedRing.from_ambient(ambient, ideal_gens,
                                                   label=self.name)
        params = [parse_poly(e, ambient, line=ln)
                  for e, ln in zip(self.param_exprs,
                                   self.param_lines or
                                   [None] * len(self.param_exprs))]
        q = A.ideal(params) if params else None
        return A, q, self.power


def parse_document(text):
    doc = InputDocument()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split(None, 1)
        key = parts[0]
        rest = parts[1] if len(parts) > 1 else ""
        col = raw.index(key) + 1
        if key == "ring":
            doc.name = rest.strip()
        elif key == "char":
            try:
                doc.char = int(rest.strip())
            except ValueError:
                raise InputError("char expects an integer", lineno, col)
            if doc.char < 0:
                raise InputError("characteristic must be >= 0", lineno, col)
        elif key == "vars":
            for item in rest.split():
                if ":" in item:
                    name, _, w = item.partition(":")
                    try:
                        weight = int(w)
                    except ValueError:
                        raise InputError("bad weight in %r" % item, lineno,
                                         raw.index(item) + 1)
                else:
                    name, weight = item, 1
                if not name.isidentifier():
                    raise InputError("bad variable name %r" % name, lineno,
                                     raw.index(item) + 1)
                if weight <= 0:
                    raise InputError("weight must be positive", lineno,
                                     raw.index(item) + 1)
                doc.vars.append((name, weight))
        elif key == "ideal":
            for s in rest.split(","):
                if s.strip():
                    doc.ideal_exprs.append(s.strip())
                    doc.ideal_lines.append(lineno)
        elif key == "params":
            for s in rest.split(","):
                if s.strip():
                    doc.param_exprs.append(s.strip())
                    doc.param_lines.append(lineno)
        elif key == "power":
            try:
                doc.power = int(rest.strip())
            except ValueError:
                raise InputError("power expects an integer", lineno, col)
        else:
            raise InputError("unknown directive %r" % key, lineno, col)
    return doc


def print_document(doc):
    out = []
    if doc.name:
        out.append("ring %s" % doc.name)
    out.append("char %d" % doc.char)
    out.append("vars %s" % " ".join("%s:%d" % (n, w) for n, w in doc.vars))
    if doc.ideal_exprs:
        out.append("ideal %s" % ", ".join(doc.ideal_exprs))
    if doc.param_exprs:
        out.append("params %s" % ", ".join(doc.param_exprs))
    if doc.power is not None:
        out.append("power %d" % doc.power)
    return "\n".join(out) + "\n"


# -- polynomial expression parsing ----------------------------------------

class _Tokens:
    def __init__(self, text, line=None):
        self.text = text
        self.line = line
        self.pos = 0
        self.toks = []
        self._tokenize()
        self.i = 0

    def _err(self, msg, pos):
        raise InputError(msg, self.line or 1, pos + 1)

    def _tokenize(self):
        t = self.text
        i = 0
        while i < len(t):
            ch = t[i]
            if ch.isspace():
                i += 1
                continue
            if ch.isdigit():
                j = i
                while j < len(t) and t[j].isdigit():
                    j += 1
                self.toks.append(("int", int(t[i:j]), i))
                i = j
            elif ch.isalpha() or ch == "_":
                j = i
                while j < len(t) and (t[j].isalnum() or t[j] == "_"):
                    j += 1
                self.toks.append(("name", t[i:j], i))
                i = j
            elif ch in "+-*^()":
                self.toks.append((ch, ch, i))
                i += 1
            else:
                self._err("unexpected character %r" % ch, i)

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else ("end", None,
                                                                 len(self.text))

    def next(self):
        tok = self.peek()
        self.i += 1
        return tok


def parse_poly(expr, ring, line=None):
    """Parse a polynomial expression into the given ring."""
    toks = _Tokens(expr, line)
    index = {name: i for i, name in enumerate(ring.names)}

    def err(msg, pos):
        raise InputError(msg, line or 1, pos + 1)

    def atom():
        kind, val, pos = toks.next()
        if kind == "int":
            return ring.const(val)
        if kind == "name":
            if val not in index:
                err("unknown variable %r" % val, pos)
            return ring.gen(index[val])
        if kind == "(":
            f = expr_sum()
            kind2, _, pos2 = toks.next()
            if kind2 != ")":
                err("expected ')'", pos2)
            return f
        if kind == "end":
            err("unexpected end of expression", pos)
        err("unexpected token %r" % (val,), pos)

    def power():
        f = atom()
        while toks.peek()[0] == "^":
            toks.next()
            kind, val, pos = toks.next()
            if kind != "int":
                err("exponent must be an integer", pos)
            f = f ** val
        return f

    def product():
        f = power()
        while True:
            kind, _, _ = toks.peek()
            if kind == "*":
                toks.next()
                f = f * power()
            elif kind in ("name", "(") or kind == "int":
                # juxtaposition: 2x, x y
                f = f * power()
            else:
                return f

    def expr_sum():
        kind, _, _ = toks.peek()
        if kind == "-":
            toks.next()
            f = -product()
        else:
            if kind == "+":
                toks.next()
            f = product()
        while True:
            kind, _, _ = toks.peek()
            if kind == "+":
                toks.next()
                f = f + product()
            elif kind == "-":
                toks.next()
                f = f - product()
            else:
                return f

    f = expr_sum()
    kind, val, pos = toks.peek()
    if kind != "end":
        err("trailing input %r" % (val,), pos)
    return f


# -- report serialization --------------------------------------------------

def format_report(pairs, narrative=None):
    """Flat one-fact-per-line document from (key, value) pairs."""
    lines = []
    for key, value in pairs:
        if isinstance(value, bool):
            value = "true" if value else "false"
        lines.append("%s = %s" % (key, value))
    if narrative:
        lines.append("")
        for ln in narrative:
            lines.append("# %s" % ln)
    return "\n".join(lines) + "\n"


def parse_report(text):
    out = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        key, _, value = line.partition(" = ")
        out[key] = value
    return out
