"""Command-line front end emitting tables and grids as CSV or JSON.

Exit status: 0 on success, 2 for domain or usage errors, 3 when a numerical
tolerance could not be met.
"""

import argparse
import io
import json
import sys

from . import __version__
from . import covariant, density, oscillator, parton
from .errors import AccuracyError, DomainError

EXIT_OK = 0
EXIT_DOMAIN = 2
EXIT_ACCURACY = 3


def format_number(x):
    """17 significant digits, lowercase exponent; integers stay integers."""
    if isinstance(x, bool):
        return str(x).lower()
    if isinstance(x, int):
        return str(x)
    return format(float(x), ".17g")


def _json_value(x):
    if isinstance(x, (bool, int)):
        return x
    # reparsed through float() so JSON and CSV carry identical digits
    return float(format_number(x))


def render_csv(columns, rows):
    lines = [",".join(columns)]
    lines.extend(",".join(format_number(r[c]) for c in columns) for r in rows)
    return "\n".join(lines) + "\n"


def render(fmt, command, params, columns, rows, summary=None):
    """Serialize a result table.

    CSV: header plus rows; an optional summary follows after one blank line
    as its own header/row pair.  JSON: ``{"meta", "data"[, "summary"]}``.
    """
    if fmt == "csv":
        text = render_csv(columns, rows)
        if summary is not None:
            text += "\n" + render_csv(list(summary), [summary])
        return text
    doc = {
        "meta": {"command": command, "parameters": params, "version": __version__},
        "data": [{c: _json_value(r[c]) for c in columns} for r in rows],
    }
    if summary is not None:
        doc["summary"] = {k: _json_value(v) for k, v in summary.items()}
    return json.dumps(doc, indent=2, allow_nan=False) + "\n"


def parse_csv(text):
    """Inverse of :func:`render` for CSV output: a list of tables of float dicts."""
    tables = []
    for block in text.strip("\n").split("\n\n"):
        lines = block.split("\n")
        header = lines[0].split(",")
        tables.append([dict(zip(header, map(float, ln.split(",")))) for ln in lines[1:]])
    return tables


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_coupling(args):
    c = oscillator.OscillatorCoupling(args.mass, args.spring, args.coupling)
    nf = oscillator.normal_modes(c)
    row = {
        "m": c.m, "K": c.K, "C": c.C,
        "omega1": nf.omega1, "omega2": nf.omega2,
        "eta_from_coupling": oscillator.eta_from_coupling(c).value,
        "eta_canonical": oscillator.eta_canonical(c).value,
    }
    params = {"mass": args.mass, "spring": args.spring, "coupling": args.coupling}
    return params, list(row), [row], None


def cmd_schmidt(args):
    if args.kmax is not None:
        if args.kmax < 0:
            raise DomainError("--kmax must be nonnegative")
        k_max = args.kmax
    else:
        if not 0.0 < args.tail_tol < 1.0:
            raise DomainError("--tail-tol must lie in (0, 1)")
        k_max = density.truncation_order(args.eta, args.tail_tol)
    spec = density.schmidt_spectrum(args.eta, k_max)
    rows = [{"k": k, "c_k": float(spec.c[k]), "lambda_k": float(spec.lam[k])}
            for k in range(k_max + 1)]
    summary = {
        "eta": spec.eta,
        "k_max": k_max,
        "tail": spec.tail,
        "purity": density.purity(args.eta),
        "entropy": density.entropy(args.eta),
        "mean_excitation": density.mean_excitation(args.eta),
        "temperature": density.temperature(args.eta, 1.0),
    }
    params = {"eta": args.eta, "kmax": args.kmax, "tail_tol": args.tail_tol}
    return params, ["k", "c_k", "lambda_k"], rows, summary


_SPACES = {
    "position": (("z", "t"), lambda eta, a, b: covariant.psi_boosted(eta, a, b) ** 2),
    "momentum": (("q_z", "q_0"), lambda eta, a, b: covariant.phi_boosted(eta, a, b) ** 2),
    # reduced state left after tracing out the time separation
    "wigner": (("x", "p"), lambda eta, a, b: density.wigner_reduced(2.0 * eta, a, b)),
}


def cmd_boost_grid(args):
    g = covariant.GridSpec(*args.grid[:4], int(args.grid[4]), int(args.grid[5]))
    (ca, cb), fn = _SPACES[args.space]
    A, B = g.mesh()
    vals = fn(args.rapidity, A, B)
    rows = [{ca: a, cb: b, "value": v}
            for a, b, v in zip(A.ravel().tolist(), B.ravel().tolist(), vals.ravel().tolist())]
    params = {"rapidity": args.rapidity, "space": args.space,
              "grid": {"z_min": g.z_min, "z_max": g.z_max, "t_min": g.t_min,
                       "t_max": g.t_max, "n_z": g.n_z, "n_t": g.n_t}}
    return params, [ca, cb, "value"], rows, None


def cmd_parton(args):
    rep = parton.parton_report(parton.BeamSpec(args.energy, args.mass))
    row = {"energy": args.energy, "mass": args.mass, "eta": rep.eta,
           "period_factor": rep.period_factor, "interaction_factor": rep.interaction_factor,
           "coherence_ratio": rep.coherence_ratio, "entropy": rep.entropy, "purity": rep.purity}
    return {"energy": args.energy, "mass": args.mass}, list(row), [row], None


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(EXIT_DOMAIN, f"{self.prog}: error: {message}\n")


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--output", default="-", help="destination path, '-' for stdout")

    p = _Parser(prog="lorentz-squeeze", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("coupling", parents=[common], help="normal modes and squeeze parameters")
    s.add_argument("--mass", type=float, default=1.0)
    s.add_argument("--spring", type=float, default=1.0)
    s.add_argument("--coupling", type=float, default=0.0)
    s.set_defaults(func=cmd_coupling)

    s = sub.add_parser("schmidt", parents=[common], help="Schmidt spectrum and thermodynamics")
    s.add_argument("--eta", type=float, required=True)
    g = s.add_mutually_exclusive_group()
    g.add_argument("--kmax", type=int)
    g.add_argument("--tail-tol", type=float, default=1e-12)
    s.set_defaults(func=cmd_schmidt)

    s = sub.add_parser("boost-grid", parents=[common], help="sampled densities on a lattice")
    s.add_argument("--rapidity", type=float, required=True)
    s.add_argument("--grid", type=float, nargs=6, default=[-4.0, 4.0, -4.0, 4.0, 81, 81],
                   metavar=("ZMIN", "ZMAX", "TMIN", "TMAX", "NZ", "NT"))
    s.add_argument("--space", choices=tuple(_SPACES), default="position")
    s.set_defaults(func=cmd_boost_grid)

    s = sub.add_parser("parton", parents=[common], help="decoherence factors for a beam (GeV)")
    s.add_argument("--energy", type=float, required=True)
    s.add_argument("--mass", type=float, default=parton.PROTON_MASS_GEV)
    s.set_defaults(func=cmd_parton)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        params, columns, rows, summary = args.func(args)
        text = render(args.format, args.command, params, columns, rows, summary)
    except DomainError as exc:
        print(str(exc).splitlines()[0], file=sys.stderr)
        return EXIT_DOMAIN
    except AccuracyError as exc:
        print(str(exc).splitlines()[0], file=sys.stderr)
        return EXIT_ACCURACY
    if args.output == "-":
        sys.stdout.write(text)
    else:
        with io.open(args.output, "w", newline="\n") as fh:
            fh.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
