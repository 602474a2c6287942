"""Command-line front end.

    eer-garside eer --e 3 --r 3 simples count
    eer-garside eer --e 3 --r 3 eq "t1 t0" "t0 t2"
    eer-garside classical-b --n 3 check-complete
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence, TextIO

from . import combinatorics as comb
from .errors import GarsideError
from .garside import (
    EERGarside,
    GarsideMonoid,
    braid_circle,
    classical_b_delta,
    format_simple,
    lattice_dot,
    psi_embed,
    simples_closed,
)
from .presentation import (
    CLASSICAL_A,
    CLASSICAL_B,
    EER,
    Presentation,
    build_classical_a,
    build_classical_b,
    dumps,
)
from .reflection import enumerate_group, group_order, project
from .reversing import DEFAULT_BUDGET, check_completeness, format_trace, left_reverse, right_reverse

FAMILIES = (EER, CLASSICAL_A, CLASSICAL_B)


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eer-garside",
        description="Word problems, simples and counting for the (e, e, r) Garside monoids.",
    )
    parser.add_argument("family", choices=FAMILIES)
    parser.add_argument("--e", type=int, help="circle size (eer family)")
    parser.add_argument("--r", type=int, help="rank (eer family)")
    parser.add_argument("--n", type=int, help="rank (classical families)")
    parser.add_argument("--format", choices=("text", "json", "dot"), default="text")
    parser.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    sub.add_parser("presentation", help="print the relations")
    cc = sub.add_parser("check-complete", help="cube condition on all generator triples")
    cc.add_argument("--prune", action="store_true")
    rev = sub.add_parser("reverse", help="reverse a signed word, optionally with its trace")
    rev.add_argument("word")
    rev.add_argument("--left", action="store_true")
    rev.add_argument("--trace", action="store_true")
    for name in ("eq", "group-eq", "lcm", "gcd"):
        sp = sub.add_parser(name)
        sp.add_argument("u")
        sp.add_argument("v")
    sub.add_parser("nf", help="left-greedy normal form").add_argument("word")
    simples = sub.add_parser("simples")
    simples.add_argument("what", choices=("count", "list", "poincare", "zeta"))
    sub.add_parser("poincare", help="closed-form Poincare polynomial")
    sub.add_parser("lattice-dot", help="Hasse diagram of the simples")
    sub.add_parser("project", help="image in G(e, e, r)").add_argument("word")
    go = sub.add_parser("group-order")
    go.add_argument("--enumerate", action="store_true", help="count by closure, not by formula")
    sub.add_parser("stats", help="atoms, length of delta, order of conjugation by delta")
    sub.add_parser("embed-b", help="image of a q-word under the type B embedding").add_argument("word")
    circ = sub.add_parser("circle")
    circ.add_argument("g1", nargs="?", default="t1")
    circ.add_argument("g0", nargs="?", default="t0")
    circ.add_argument("--bound", type=int)
    return parser


class Session:
    def __init__(self, args: argparse.Namespace, out: TextIO):
        self.args = args
        self.out = out
        self.presentation = self._presentation()
        self._monoid = None

    def _presentation(self) -> Presentation:
        a = self.args
        if a.family == EER:
            if a.e is None or a.r is None:
                raise UsageError("the eer family needs --e and --r")
            self.eer = EERGarside(a.e, a.r, a.budget)
            return self.eer.presentation
        if a.n is None:
            raise UsageError(f"the {a.family} family needs --n")
        self.eer = None
        return build_classical_a(a.n) if a.family == CLASSICAL_A else build_classical_b(a.n)

    @property
    def monoid(self) -> GarsideMonoid:
        if self.eer is not None:
            return self.eer
        if self._monoid is None:
            p = self.presentation
            delta = classical_b_delta(p.r) if p.family == CLASSICAL_B else None
            self._monoid = GarsideMonoid(p, delta, self.args.budget)
        return self._monoid

    def require_eer(self) -> EERGarside:
        if self.eer is None:
            raise UsageError(f"{self.args.command} needs the eer family")
        return self.eer

    def emit(self, text: str, data=None) -> None:
        if self.args.format == "json":
            json.dump(data if data is not None else text, self.out, sort_keys=True)
            self.out.write("\n")
        else:
            self.out.write(text if text.endswith("\n") else text + "\n")

    def fmt(self, w) -> str:
        return self.presentation.format(w)

    def emit_poly(self, poly: comb.Polynomial) -> None:
        if poly.denominator == 1:
            text = " ".join(str(c) for c in poly.coefficients)
        else:
            text = f"{' '.join(str(c) for c in poly.scaled().coefficients)} / {poly.denominator}"
        self.emit(text, {"coefficients": poly.to_json(), "polynomial": str(poly)})

    # -- commands ---------------------------------------------------------

    def cmd_presentation(self):
        p = self.presentation
        rels = [[self.fmt(rel.lhs), self.fmt(rel.rhs)] for rel in p.relations]
        self.emit(dumps(p), {"family": p.family, "e": p.e, "r": p.r, "relations": rels})

    def cmd_check_complete(self):
        report = check_completeness(self.presentation, self.args.prune, self.args.budget)
        failing = None
        if report.failing:
            failing = [self.presentation.generators[i].name for i in report.failing]
        self.emit(
            "pass" if report.passed else "fail " + " ".join(failing),
            {"passed": report.passed, "checked": report.checked, "failing": failing},
        )
        return 0

    def cmd_reverse(self):
        p = self.presentation
        w = p.signed_word(self.args.word)
        fn = left_reverse if self.args.left else right_reverse
        res = fn(p, w, self.args.budget, self.args.trace)
        text = self.fmt(res.word)
        if self.args.trace and res.trace:
            text += "\n" + format_trace(p, res)
        self.emit(
            text,
            {
                "positive": self.fmt(res.positive),
                "negative": self.fmt(res.negative),
                "side": res.side,
                "steps": res.steps,
            },
        )

    def _pair(self):
        p = self.presentation
        return p.word(self.args.u), p.word(self.args.v)

    def cmd_eq(self):
        u, v = self._pair()
        ok = self.monoid.equal(u, v)
        self.emit(str(ok).lower(), ok)

    def cmd_group_eq(self):
        p = self.presentation
        ok = self.monoid.equal_group(p.signed_word(self.args.u), p.signed_word(self.args.v))
        self.emit(str(ok).lower(), ok)

    def cmd_lcm(self):
        u, v = self._pair()
        a, b = self.monoid.complement(u, v)
        lcm = u + a
        self.emit(
            self.fmt(lcm),
            {"lcm": self.fmt(lcm), "u\\v": self.fmt(a), "v\\u": self.fmt(b)},
        )

    def cmd_gcd(self):
        u, v = self._pair()
        g = self.monoid.gcd_left(u, v)
        self.emit(self.fmt(g), self.fmt(g))

    def cmd_nf(self):
        nf = self.monoid.normal_form(self.presentation.word(self.args.word))
        factors = [self.fmt(f) for f in nf.factors]
        text = f"Delta^{nf.delta_power}" + "".join(f" . {f}" for f in factors)
        self.emit(text, {"delta_power": nf.delta_power, "factors": factors})

    def cmd_simples(self):
        g = self.require_eer()
        what = self.args.what
        if what == "count":
            n = len(simples_closed(g))
            self.emit(str(n), n)
        elif what == "list":
            simples = simples_closed(g)
            lines = [format_simple(g, s) for s in simples]
            data = [
                {"word": self.fmt(s.word), "tuple": [self.fmt(d.word(g.e)) for d in s.parts]}
                for s in simples
            ]
            self.emit("\n".join(lines), data)
        elif what == "poincare":
            self.emit_poly(comb.poincare_census(g))
        else:
            self.emit_poly(comb.zeta_polynomial(g))

    def cmd_poincare(self):
        g = self.require_eer()
        self.emit_poly(comb.poincare_closed(g.e, g.r))

    def cmd_lattice_dot(self):
        dot = lattice_dot(self.require_eer())
        if self.args.format == "json":
            self.emit(dot, {"dot": dot})
        else:
            self.out.write(dot)

    def cmd_project(self):
        g = self.require_eer()
        m = project(g.presentation, self.presentation.signed_word(self.args.word))
        self.emit(str(m), m.to_json())

    def cmd_group_order(self):
        g = self.require_eer()
        n = len(enumerate_group(g.e, g.r)) if self.args.enumerate else group_order(g.e, g.r)
        self.emit(str(n), n)

    def cmd_stats(self):
        g = self.require_eer()
        st = comb.duality_stats_structural(g)
        data = {
            "atoms": st.atom_count,
            "delta_length": st.delta_length,
            "conjugation_order": st.conj_order,
        }
        self.emit(f"{st.atom_count} {st.delta_length} {st.conj_order}", data)

    def cmd_embed_b(self):
        g = self.require_eer()
        w = build_classical_b(g.r - 1).word(self.args.word)
        image = psi_embed(w, g.e)
        self.emit(self.fmt(image), self.fmt(image))

    def cmd_circle(self):
        g = self.require_eer()
        p = self.presentation
        bound = self.args.bound or 4 * g.e
        c = braid_circle(g, p.signed_word(self.args.g1), p.signed_word(self.args.g0), bound)
        members = [self.fmt(c.members[i]) for i in range(c.cardinality)]
        self.emit(
            f"{c.cardinality}: " + ", ".join(members),
            {"cardinality": c.cardinality, "members": members},
        )


def run(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        session = Session(args, out)
        handler = getattr(session, "cmd_" + args.command.replace("-", "_"))
        handler()
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (GarsideError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run())
