"""Command-line front end.

Subcommands: proset, algebra, group, lazy, recover, functor, experiment,
scramble.  All reports are UTF-8 JSON on stdout, embedding the invocation
and library version; randomized paths take --seed (default 0), so the same
invocation is byte-identical.  Exit codes: 0 success, 1 domain error,
2 usage error.
"""

import argparse
import json
import random
import sys

from . import __version__
from .errors import IncRingError
from .functor_cat import (
    coequalizer,
    compose,
    induced_hom,
    pushout,
    validate_fcc,
)
from .glgroup import (
    certify,
    commutator,
    dickson_normal_closure,
    invert,
    is_central,
    iterated_commutator_sample,
    GroupElement,
    random_invertible,
)
from .io import (
    canonical_labels,
    family_from_json,
    family_to_json,
    lazy_from_json,
    lazy_to_json,
    load_json,
    map_from_json,
    map_to_json,
    matrix_from_json,
    matrix_to_json,
    proset_from_json,
    proset_to_json,
    ring_from_json,
    ring_to_json,
)
from .lazy import lazy_invert, lazy_mul, qz_window_check
from .prosets import Proset, elem_key
from .recovery import BundleAccess, MatrixAccess, recover_poset, scramble
from .rings import ModRing, PrimeField, QQ, ZZ


def _load_ref(text):
    """A reference on the command line is inline JSON or a file path."""
    if text is None:
        raise IncRingError("a required input reference is missing")
    stripped = text.strip()
    if stripped.startswith("{") or stripped.startswith("["):
        return json.loads(stripped)
    return load_json(text)


def _ring_arg(text):
    if text == "Z":
        return ZZ
    if text == "Q":
        return QQ
    if text.startswith("mod:"):
        return ModRing(int(text.split(":", 1)[1]))
    if text.startswith("gf:"):
        return PrimeField(int(text.split(":", 1)[1]))
    return ring_from_json(_load_ref(text))


def _family_arg(text):
    if text in ("N", "Z", "Zig"):
        return family_from_json({"family": text})
    if text == "nstar_div":
        return family_from_json({"family": {"nstar_div": True}})
    if text.startswith("two_block:"):
        m, n = text.split(":", 1)[1].split(",")
        return family_from_json({"family": {"two_block": [int(m), int(n)]}})
    return family_from_json(_load_ref(text))


def _label(text):
    try:
        return int(text)
    except ValueError:
        return text


def _proset_payload(pro):
    if all(isinstance(s, (int, str)) for s in pro.elements):
        return proset_to_json(pro), None
    relabeled, legend = canonical_labels(pro)
    return proset_to_json(relabeled), legend


def _emit(args, payload):
    report = {
        "invocation": "incring " + " ".join(args._argv),
        "version": __version__,
    }
    report.update(payload)
    print(json.dumps(report, indent=2, sort_keys=True))
    return 0


# -- proset ---------------------------------------------------------------------


def cmd_proset(args):
    if args.action == "intervals":
        if args.family:
            fam = _family_arg(args.family)
        else:
            fam = proset_from_json(_load_ref(args.proset))
        box = fam.interval(_label(args.frm), _label(args.to))
        return _emit(args, {"interval": sorted(box, key=elem_key)})
    if args.action == "window":
        fam = _family_arg(args.family)
        return _emit(args, {"window": sorted(fam.window(args.k), key=elem_key)})
    if args.action == "closure":
        pro = proset_from_json(_load_ref(args.proset))
        subset = [_label(x) for x in args.subset.split(",")]
        return _emit(args, {"closure": sorted(pro.convex_closure(subset), key=elem_key)})
    if args.action == "check":
        pro = proset_from_json(_load_ref(args.proset))
        payload, legend = _proset_payload(pro)
        out = {
            "proset": payload,
            "is_poset": pro.is_poset(),
            "irreducible": pro.is_irreducible(),
            "components": len(pro.components()),
            "classes": len(pro.classes()),
        }
        if legend:
            out["legend"] = legend
        return _emit(args, out)
    raise IncRingError("unknown proset action %r" % (args.action,))


# -- algebra -------------------------------------------------------------------


def cmd_algebra(args):
    if args.action in ("mul", "add"):
        a = matrix_from_json(_load_ref(args.a))
        b = matrix_from_json(_load_ref(args.b))
        out = a.mul(b) if args.action == "mul" else a.add(b)
        return _emit(args, {"result": matrix_to_json(out)})
    if args.action == "project":
        a = matrix_from_json(_load_ref(args.a))
        subset = [_label(x) for x in args.subset.split(",")]
        return _emit(args, {"result": matrix_to_json(a.project(subset))})
    raise IncRingError("unknown algebra action %r" % (args.action,))


# -- group ----------------------------------------------------------------------


def cmd_group(args):
    if args.action == "invert":
        m = matrix_from_json(_load_ref(args.input))
        return _emit(args, {"inverse": matrix_to_json(invert(m))})
    if args.action == "certify":
        m = matrix_from_json(_load_ref(args.input))
        g = certify(m)
        return _emit(args, {
            "invertible": True,
            "inverse": matrix_to_json(g.inverse_matrix),
        })
    if args.action == "central":
        m = matrix_from_json(_load_ref(args.input))
        rep = is_central(m)
        return _emit(args, {
            "central": rep.central,
            "scalar_unit": rep.scalar_test,
            "hypothesis_ok": rep.hypothesis_ok,
            "agree": rep.agree,
        })
    if args.action == "commutator":
        a = matrix_from_json(_load_ref(args.a))
        b = matrix_from_json(_load_ref(args.b))
        c = commutator(GroupElement(a), GroupElement(b))
        return _emit(args, {"commutator": matrix_to_json(c.matrix)})
    if args.action == "random":
        pro = proset_from_json(_load_ref(args.proset))
        ring = _ring_arg(args.ring)
        rng = random.Random(args.seed)
        return _emit(args, {"matrix": matrix_to_json(random_invertible(pro, ring, rng))})
    raise IncRingError("unknown group action %r" % (args.action,))


# -- lazy -----------------------------------------------------------------------


def cmd_lazy(args):
    if args.action == "project":
        lz = lazy_from_json(_load_ref(args.input))
        win = lz.family.window(args.window)
        return _emit(args, {"window": sorted(win, key=elem_key),
                            "matrix": matrix_to_json(lz.project(win))})
    if args.action == "invert":
        lz = lazy_from_json(_load_ref(args.input))
        inv = lazy_invert(lz)
        payload = {}
        if inv.finitary is not None:
            payload["inverse"] = lazy_to_json(inv)
        if args.window is not None:
            win = lz.family.window(args.window)
            payload["window"] = sorted(win, key=elem_key)
            payload["window_matrix"] = matrix_to_json(inv.project(win))
        return _emit(args, payload)
    if args.action == "mul":
        a = lazy_from_json(_load_ref(args.a))
        b = lazy_from_json(_load_ref(args.b))
        prod = lazy_mul(a, b)
        payload = {}
        if prod.finitary is not None:
            payload["product"] = lazy_to_json(prod)
        if args.window is not None:
            win = a.family.window(args.window)
            payload["window"] = sorted(win, key=elem_key)
            payload["window_matrix"] = matrix_to_json(prod.project(win))
        return _emit(args, payload)
    if args.action == "qz":
        fam = _family_arg(args.family)
        ring = _ring_arg(args.ring)
        window = sorted(fam.window(args.window), key=elem_key)
        inner = sorted(fam.window(args.inner), key=elem_key)
        return _emit(args, {"report": qz_window_check(fam, ring, window, inner)})
    raise IncRingError("unknown lazy action %r" % (args.action,))


# -- recover --------------------------------------------------------------------


def cmd_recover(args):
    obj = _load_ref(args.input)
    if "bundle" in obj:
        # accept a whole scramble report, so the two commands pipe together
        obj = obj["bundle"]
    if "table" in obj:
        ring = ring_from_json({"ring": obj["ring"]})
        access = BundleAccess(obj, ring)
    else:
        pro = proset_from_json(obj["proset"])
        ring = ring_from_json(obj["ring"])
        access = MatrixAccess(pro, ring)
    rng = random.Random(args.seed)
    rec = recover_poset(access, mode=args.mode, budget=args.budget, rng=rng)
    payload, legend = _proset_payload(rec)
    out = {"recovered": payload, "mode": args.mode, "operations": access.ops}
    if legend:
        out["legend"] = legend
    return _emit(args, out)


# -- functor --------------------------------------------------------------------


def cmd_functor(args):
    if args.action == "validate":
        f = map_from_json(_load_ref(args.map))
        records = validate_fcc(f)
        comps = []
        for rec in records:
            row = {"kind": rec[0], "component": [str(s) for s in rec[1]]}
            if rec[0] == "constant":
                row["value"] = str(rec[2])
            comps.append(row)
        return _emit(args, {"valid": True, "components": comps})
    if args.action == "apply":
        f = map_from_json(_load_ref(args.map))
        validate_fcc(f)
        m = matrix_from_json(_load_ref(args.matrix))
        return _emit(args, {"result": matrix_to_json(induced_hom(f, m))})
    if args.action == "compose":
        f = map_from_json(_load_ref(args.f))
        g = map_from_json(_load_ref(args.g))
        h = compose(f, g)
        validate_fcc(h)
        return _emit(args, {"composite": map_to_json(h)})
    if args.action == "pushout":
        f = map_from_json(_load_ref(args.f))
        g = map_from_json(_load_ref(args.g))
        quo, q1, q2 = pushout(f, g)
        payload, legend = _proset_payload(quo)
        order = sorted(quo.elements, key=elem_key)
        if legend:
            names = {s: "c%d" % i for i, s in enumerate(order)}
        else:
            names = {s: s for s in order}
        return _emit(args, {
            "pushout": payload,
            "legend": legend,
            "leg1": {str(s): names[q1(s)] for s in q1.domain.elements},
            "leg2": {str(s): names[q2(s)] for s in q2.domain.elements},
        })
    if args.action == "coeq":
        f = map_from_json(_load_ref(args.f))
        g = map_from_json(_load_ref(args.g))
        quo, q = coequalizer(f, g)
        payload, legend = _proset_payload(quo)
        order = sorted(quo.elements, key=elem_key)
        if legend:
            names = {s: "c%d" % i for i, s in enumerate(order)}
        else:
            names = {s: s for s in order}
        return _emit(args, {
            "coequalizer": payload,
            "legend": legend,
            "projection": {str(s): names[q(s)] for s in q.domain.elements},
        })
    raise IncRingError("unknown functor action %r" % (args.action,))


# -- experiment -----------------------------------------------------------------


def cmd_experiment(args):
    cfg = _load_ref(args.config)
    seed = args.seed if args.seed is not None else cfg.get("seed", 0)
    rng = random.Random(seed)
    kind = cfg.get("experiment")
    if kind == "dickson":
        rep = dickson_normal_closure(int(cfg["n"]), int(cfg["q"]), rng)
        rep = {k: v for k, v in rep.items() if k != "seed"}
        return _emit(args, {"experiment": "dickson", "seed": seed, "report": rep})
    if kind == "commutators":
        pro = proset_from_json(cfg["proset"])
        ring = ring_from_json(cfg["ring"])
        rep = iterated_commutator_sample(
            pro, ring, int(cfg["depth"]), int(cfg.get("samples", 100)), rng
        )
        return _emit(args, {"experiment": "commutators", "seed": seed, "report": rep})
    if kind == "center":
        m = matrix_from_json(cfg["matrix"])
        rep = is_central(m)
        return _emit(args, {"experiment": "center", "seed": seed, "report": {
            "central": rep.central,
            "scalar_unit": rep.scalar_test,
            "hypothesis_ok": rep.hypothesis_ok,
            "agree": rep.agree,
        }})
    if kind == "qz":
        fam = family_from_json(cfg["family"])
        ring = ring_from_json(cfg["ring"])
        window = sorted(fam.window(int(cfg["window"])), key=elem_key)
        inner = sorted(fam.window(int(cfg["inner"])), key=elem_key)
        rep = qz_window_check(fam, ring, window, inner)
        return _emit(args, {"experiment": "qz", "seed": seed, "report": rep})
    raise IncRingError("unknown experiment %r" % (kind,))


# -- scramble -------------------------------------------------------------------


def cmd_scramble(args):
    pro = proset_from_json(_load_ref(args.proset))
    ring = _ring_arg(args.ring)
    bundle, _ = scramble(pro, ring, seed=args.seed, samples=args.samples)
    return _emit(args, {"bundle": bundle})


def build_parser():
    top = argparse.ArgumentParser(prog="incring", description=__doc__)
    top.add_argument("--version", action="version", version=__version__)
    subs = top.add_subparsers(dest="command", required=True)

    p = subs.add_parser("proset", help="intervals, windows, closures, checks")
    p.add_argument("action", choices=["intervals", "window", "closure", "check"])
    p.add_argument("--family")
    p.add_argument("--proset")
    p.add_argument("--from", dest="frm")
    p.add_argument("--to")
    p.add_argument("--k", type=int)
    p.add_argument("--subset")
    p.set_defaults(fn=cmd_proset)

    p = subs.add_parser("algebra", help="matrix arithmetic")
    p.add_argument("action", choices=["mul", "add", "project"])
    p.add_argument("--a")
    p.add_argument("--b")
    p.add_argument("--subset")
    p.set_defaults(fn=cmd_algebra)

    p = subs.add_parser("group", help="units, inverses, centrality")
    p.add_argument("action", choices=["invert", "certify", "central", "commutator", "random"])
    p.add_argument("--input")
    p.add_argument("--a")
    p.add_argument("--b")
    p.add_argument("--proset")
    p.add_argument("--ring")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_group)

    p = subs.add_parser("lazy", help="infinite supports through windows")
    p.add_argument("action", choices=["project", "invert", "mul", "qz"])
    p.add_argument("--input")
    p.add_argument("--a")
    p.add_argument("--b")
    p.add_argument("--family")
    p.add_argument("--ring")
    p.add_argument("--window", type=int)
    p.add_argument("--inner", type=int)
    p.set_defaults(fn=cmd_lazy)

    p = subs.add_parser("recover", help="poset recovery from ring access")
    p.add_argument("--input", required=True)
    p.add_argument("--mode", choices=["auto", "exhaustive", "witness"], default="auto")
    p.add_argument("--budget", type=int, default=10**5)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_recover)

    p = subs.add_parser("functor", help="admissible maps and their colimits")
    p.add_argument("action", choices=["validate", "apply", "compose", "pushout", "coeq"])
    p.add_argument("--map")
    p.add_argument("--matrix")
    p.add_argument("--f")
    p.add_argument("--g")
    p.set_defaults(fn=cmd_functor)

    p = subs.add_parser("experiment", help="seeded experiment suites from a config")
    p.add_argument("--config", required=True)
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(fn=cmd_experiment)

    p = subs.add_parser("scramble", help="emit a structure-constant bundle")
    p.add_argument("--proset", required=True)
    p.add_argument("--ring", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=0)
    p.set_defaults(fn=cmd_scramble)

    return top


def main(argv=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else 2
    args._argv = argv
    try:
        return args.fn(args)
    except IncRingError as exc:
        print(json.dumps({
            "invocation": "incring " + " ".join(argv),
            "version": __version__,
            "error": {"type": type(exc).__name__, "message": str(exc)},
        }, indent=2, sort_keys=True))
        return 1
    except (OSError, ValueError, KeyError) as exc:
        print(json.dumps({
            "invocation": "incring " + " ".join(argv),
            "version": __version__,
            "error": {"type": type(exc).__name__, "message": str(exc)},
        }, indent=2, sort_keys=True))
        return 1


if __name__ == "__main__":
    sys.exit(main())
