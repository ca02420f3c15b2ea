"""Parser for the session input language.

A session is a sequence of ring declarations, ideal declarations, and
commands, each terminated by a semicolon.  The grammar is whitespace
insensitive and supports ``#`` line comments:

    ring A = [x, y];
    ideal I in A = (x^2, x*y);
    vnum I;
    verify-theorem kind=ordinary k=2 I J;

Command arguments are named key=value pairs (kind, k, cap) plus
positional ideal names; ``colon`` additionally accepts a monomial.  All
errors carry a line:column position.
"""

from dataclasses import dataclass, field

from .errors import ParseError
from .filtrations import FiltrationKind
from .ideals import MonomialIdeal, from_exps
from .rings import Monomial, Ring

COMMANDS = {
    "mingens",
    "colon",
    "ass",
    "min",
    "irrdec",
    "vnum",
    "power",
    "symb",
    "intclos",
    "verify-expansion",
    "verify-theorem",
    "check-property",
    "ntf",
}

KINDS = {kind.value: kind for kind in FiltrationKind}

_PUNCT = set("=[](),;^*-")


@dataclass(frozen=True, slots=True)
class Token:
    kind: str  # "name" | "nat" | one-character punctuation | "eof"
    text: str
    line: int
    col: int


def _tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    line, col = 1, 1
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            col += 1
            i += 1
            continue
        if ch == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        if ch.isalpha() or ch == "_":
            start = i
            start_col = col
            while i < n and (text[i].isalnum() or text[i] == "_"):
                i += 1
                col += 1
            tokens.append(Token("name", text[start:i], line, start_col))
            continue
        if ch.isdigit():
            start = i
            start_col = col
            while i < n and text[i].isdigit():
                i += 1
                col += 1
            tokens.append(Token("nat", text[start:i], line, start_col))
            continue
        if ch in _PUNCT:
            tokens.append(Token(ch, ch, line, col))
            i += 1
            col += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    tokens.append(Token("eof", "", line, col))
    return tokens


@dataclass(frozen=True, slots=True)
class Command:
    name: str
    ideals: tuple[str, ...]
    mono: Monomial | None
    kind: FiltrationKind | None
    k: int | None
    cap: int | None
    line: int
    col: int


@dataclass(slots=True)
class Session:
    rings: dict[str, Ring] = field(default_factory=dict)
    ideals: dict[str, MonomialIdeal] = field(default_factory=dict)
    commands: list[Command] = field(default_factory=list)


# Command signatures: (number of ideal arguments, allowed keys, required keys).
_SIGNATURES: dict[str, tuple[int, frozenset, frozenset]] = {
    "mingens": (1, frozenset(), frozenset()),
    "colon": (1, frozenset(), frozenset()),
    "ass": (1, frozenset(), frozenset()),
    "min": (1, frozenset(), frozenset()),
    "irrdec": (1, frozenset(), frozenset()),
    "vnum": (1, frozenset(), frozenset()),
    "power": (1, frozenset({"k"}), frozenset({"k"})),
    "symb": (1, frozenset({"kind", "k"}), frozenset({"kind", "k"})),
    "intclos": (1, frozenset({"k"}), frozenset()),
    "verify-expansion": (2, frozenset({"kind", "k"}), frozenset({"kind", "k"})),
    "verify-theorem": (2, frozenset({"kind", "k"}), frozenset({"kind", "k"})),
    "check-property": (1, frozenset({"kind", "k", "cap"}), frozenset({"kind", "k"})),
    "ntf": (1, frozenset({"k"}), frozenset()),
}


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.session = Session()

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str, what: str) -> Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(
                f"expected {what}, found {tok.text or 'end of input'!r}",
                tok.line,
                tok.col,
            )
        return self.advance()

    def fail(self, message: str, tok: Token):
        raise ParseError(message, tok.line, tok.col)

    def parse(self) -> Session:
        while self.peek().kind != "eof":
            tok = self.peek()
            if tok.kind != "name":
                self.fail(f"expected a statement, found {tok.text!r}", tok)
            if tok.text == "ring":
                self.ring_decl()
            elif tok.text == "ideal":
                self.ideal_decl()
            else:
                self.command()
        return self.session

    def ring_decl(self):
        self.advance()  # ring
        name_tok = self.expect("name", "a ring name")
        if name_tok.text in self.session.rings:
            self.fail(f"ring {name_tok.text!r} already declared", name_tok)
        self.expect("=", "'='")
        self.expect("[", "'['")
        vars: list[str] = []
        while True:
            var_tok = self.expect("name", "a variable name")
            if var_tok.text in vars:
                self.fail(f"duplicate variable {var_tok.text!r}", var_tok)
            vars.append(var_tok.text)
            tok = self.advance()
            if tok.kind == "]":
                break
            if tok.kind != ",":
                self.fail("expected ',' or ']' in variable list", tok)
        self.expect(";", "';'")
        self.session.rings[name_tok.text] = Ring(name_tok.text, tuple(vars))

    def ideal_decl(self):
        self.advance()  # ideal
        name_tok = self.expect("name", "an ideal name")
        if name_tok.text in self.session.ideals:
            self.fail(f"ideal {name_tok.text!r} already declared", name_tok)
        in_tok = self.expect("name", "'in'")
        if in_tok.text != "in":
            self.fail("expected 'in' after the ideal name", in_tok)
        ring_tok = self.expect("name", "a ring name")
        ring = self.session.rings.get(ring_tok.text)
        if ring is None:
            self.fail(f"unknown ring {ring_tok.text!r}", ring_tok)
        self.expect("=", "'='")
        self.expect("(", "'('")
        exps: list[tuple[int, ...]] = []
        if self.peek().kind == ")":
            self.advance()
        else:
            while True:
                exps.append(self.mono_exp(ring))
                tok = self.advance()
                if tok.kind == ")":
                    break
                if tok.kind != ",":
                    self.fail("expected ',' or ')' in generator list", tok)
        self.expect(";", "';'")
        self.session.ideals[name_tok.text] = from_exps(ring, exps)

    def mono_exp(self, ring: Ring) -> tuple[int, ...]:
        """mono := "1" | term ("*" term)*  with term := NAME ("^" NAT)?"""
        vec = [0] * ring.nvars
        tok = self.peek()
        if tok.kind == "nat":
            if tok.text != "1":
                self.fail("the only numeric monomial is 1 (write () for the zero ideal)", tok)
            self.advance()
            return tuple(vec)
        while True:
            var_tok = self.expect("name", "a variable name")
            if var_tok.text not in ring.vars:
                self.fail(
                    f"variable {var_tok.text!r} is not in ring {ring.name!r}", var_tok
                )
            exp = 1
            if self.peek().kind == "^":
                self.advance()
                exp_tok = self.expect("nat", "an exponent")
                exp = int(exp_tok.text)
            vec[ring.index(var_tok.text)] += exp
            if self.peek().kind == "*":
                self.advance()
                continue
            return tuple(vec)

    def command_name(self) -> Token:
        """Command words may be hyphenated (verify-expansion)."""
        tok = self.expect("name", "a command")
        text = tok.text
        while self.peek().kind == "-":
            self.advance()
            part = self.expect("name", "the rest of the command name")
            text += "-" + part.text
        return Token("name", text, tok.line, tok.col)

    def value_token(self) -> Token:
        """A key=value right-hand side; kind values may be hyphenated."""
        tok = self.advance()
        if tok.kind == "nat":
            return tok
        if tok.kind != "name":
            self.fail(f"expected a value, found {tok.text!r}", tok)
        text = tok.text
        while self.peek().kind == "-":
            self.advance()
            part = self.expect("name", "the rest of the value")
            text += "-" + part.text
        return Token("name", text, tok.line, tok.col)

    def command(self):
        head = self.command_name()
        if head.text not in COMMANDS:
            self.fail(f"unknown command {head.text!r}", head)
        arity, allowed, required = _SIGNATURES[head.text]
        named: dict[str, Token] = {}
        ideals: list[str] = []
        mono_val: Monomial | None = None
        while self.peek().kind != ";":
            tok = self.peek()
            if tok.kind == "eof":
                self.fail("unterminated command; expected ';'", tok)
            if tok.kind == "name" and self.tokens[self.pos + 1].kind == "=":
                key_tok = self.advance()
                self.advance()  # '='
                if key_tok.text not in allowed:
                    self.fail(
                        f"command {head.text!r} takes no argument {key_tok.text!r}",
                        key_tok,
                    )
                if key_tok.text in named:
                    self.fail(f"duplicate argument {key_tok.text!r}", key_tok)
                named[key_tok.text] = self.value_token()
                continue
            # Positional argument: an ideal name, or (for colon) a monomial.
            if head.text == "colon" and len(ideals) == 1 and mono_val is None:
                base_ring = self.session.ideals[ideals[0]].ring
                lookahead = self.tokens[self.pos + 1]
                if (
                    tok.kind == "name"
                    and tok.text in self.session.ideals
                    and lookahead.kind not in ("^", "*")
                ):
                    # A bare declared-ideal name means the ideal colon;
                    # anything else is a monomial in the first ideal's ring.
                    self.advance()
                    ideals.append(tok.text)
                else:
                    mono_val = Monomial(base_ring, self.mono_exp(base_ring))
                continue
            if tok.kind != "name" or len(ideals) >= arity:
                self.fail(
                    f"unexpected argument {tok.text!r} for command {head.text!r}", tok
                )
            self.advance()
            if tok.text not in self.session.ideals:
                self.fail(f"unknown ideal {tok.text!r}", tok)
            ideals.append(tok.text)
        self.advance()  # ';'
        if head.text == "colon":
            if not (len(ideals) == 2 or (len(ideals) == 1 and mono_val is not None)):
                self.fail(
                    "colon needs an ideal and a monomial (or a second ideal)", head
                )
        elif len(ideals) != arity:
            self.fail(
                f"command {head.text!r} needs {arity} ideal argument(s), got {len(ideals)}",
                head,
            )
        missing = required - named.keys()
        if missing:
            self.fail(
                f"command {head.text!r} is missing argument(s): {', '.join(sorted(missing))}",
                head,
            )
        kind = None
        if "kind" in named:
            kind_tok = named["kind"]
            kind = KINDS.get(kind_tok.text)
            if kind is None:
                self.fail(
                    f"unknown kind {kind_tok.text!r} (expected one of: "
                    f"{', '.join(sorted(KINDS))})",
                    kind_tok,
                )
            if head.text == "symb" and kind not in (
                FiltrationKind.SYMBOLIC_ASS,
                FiltrationKind.SYMBOLIC_MIN,
            ):
                self.fail("symb takes kind=symb-ass or kind=symb-min", kind_tok)
        k = self.nat_arg(named, "k")
        cap = self.nat_arg(named, "cap")
        self.session.commands.append(
            Command(
                head.text,
                tuple(ideals),
                mono_val,
                kind,
                k,
                cap,
                head.line,
                head.col,
            )
        )

    def nat_arg(self, named: dict[str, Token], key: str) -> int | None:
        tok = named.get(key)
        if tok is None:
            return None
        if tok.kind != "nat":
            self.fail(f"argument {key} must be a natural number", tok)
        return int(tok.text)

def parse_session(text: str) -> Session:
    return _Parser(text).parse()
