"""Command line front end for checking presentation files.

Presentations live in JSON documents: a finite monoid with graded
labels, an enriched category on finitely many objects, or a pointwise
tensor image of either over declared probe objects.  The ``check``
command runs the selected law checkers in dependency order,
``export-polyad`` re-packages a graded presentation as a pointwise
image and verifies it on the declared probes, and ``antipode`` solves
for the antipode family and prints it in the file's own matrix layout
so it can be spliced back in.

All numbers are exact fractions written as strings, matrices are
row-major, and multiplication tables are nested objects keyed by the
declared atoms.  Unknown fields are rejected so a typo fails loudly
instead of silently dropping structure.  Machine output
(``--format json``) is canonical: keys are sorted and nothing time- or
path-dependent is included, so identical inputs give byte-identical
reports.  The text format adds timing and is meant for humans.

Exit codes: 0 when every selected check passes, 1 when a check fails,
2 for malformed input.
"""

import argparse
import json
import sys
import time
from dataclasses import dataclass
from fractions import Fraction

from . import hopf_structures as hs
from . import vect_backend as vb
from .finset_span import FinSet
from .monoidale_duoidal import check_frobenius
from .spanv_core import SpanVError, VectBackend

FORMAT_VERSION = 1

_CHECK_ORDER = ("monad", "opmonoidal", "hopf", "antipode", "duoidal",
                "frobenius")
_CHAIN_BLOCKERS = {
    "monad": (),
    "opmonoidal": ("monad",),
    "hopf": ("monad", "opmonoidal"),
    "antipode": ("monad", "opmonoidal", "hopf"),
    "duoidal": ("monad", "opmonoidal", "hopf"),
    "frobenius": (),
}
_NEEDS_COMONOID = ("opmonoidal", "hopf", "antipode", "duoidal")
_NEEDS_ANTIPODE = ("antipode", "duoidal")
_POLYAD_CHECKS = ("monad", "hopf")
_MONAD_LAWS = ("associativity", "left unit", "right unit")


class InputError(Exception):
    """A malformed document; the message starts with the JSON path."""


def _fail(path, message):
    raise InputError("%s: %s" % (path, message))


def _require_mapping(value, path):
    if not isinstance(value, dict):
        _fail(path, "expected an object")
    return value


def _exact_keys(mapping, expected, path):
    got = set(mapping)
    expected = set(expected)
    missing = sorted(expected - got, key=repr)
    extra = sorted(got - expected, key=repr)
    if missing:
        _fail(path, "missing entry for %r" % (missing[0],))
    if extra:
        _fail(path, "unexpected entry %r" % (extra[0],))


def _check_keys(doc, required, optional, path):
    for key in required:
        if key not in doc:
            _fail(path, "missing required field %r" % key)
    for key in doc:
        if key not in required and key not in optional:
            _fail(path, "unknown field %r" % key)


def _fraction(value, path):
    if not isinstance(value, str):
        _fail(path, "expected a fraction string")
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError):
        _fail(path, "malformed fraction %r" % value)


def _atom(value, path):
    if not isinstance(value, str) or not value:
        _fail(path, "expected a nonempty atom string")
    return value


def _atom_list(value, path):
    if not isinstance(value, list) or not value:
        _fail(path, "expected a nonempty list of atoms")
    for i, entry in enumerate(value):
        _atom(entry, "%s[%d]" % (path, i))
    if len(set(value)) != len(value):
        _fail(path, "duplicate atom")
    return list(value)


def _vobject(value, path):
    """A graded object given as a list of [atom, grade] pairs."""
    if not isinstance(value, list) or not value:
        _fail(path, "expected a nonempty list of [atom, grade] pairs")
    basis = []
    seen = set()
    for i, entry in enumerate(value):
        here = "%s[%d]" % (path, i)
        if (not isinstance(entry, list) or len(entry) != 2
                or isinstance(entry[1], bool) or not isinstance(entry[1], int)):
            _fail(here, "expected an [atom, grade] pair")
        name = _atom(entry[0], here)
        if name in seen:
            _fail(here, "duplicate basis atom %r" % name)
        seen.add(name)
        basis.append(((name,), entry[1]))
    return vb.VObject(basis)


def _vmorphism(value, dom, cod, path):
    if not isinstance(value, list) or len(value) != cod.dim:
        _fail(path, "expected a matrix with %d rows" % cod.dim)
    rows = []
    for i, row in enumerate(value):
        if not isinstance(row, list) or len(row) != dom.dim:
            _fail("%s[%d]" % (path, i),
                  "expected a row with %d entries" % dom.dim)
        rows.append([_fraction(entry, "%s[%d][%d]" % (path, i, j))
                     for j, entry in enumerate(row)])
    return vb.VMorphism(dom, cod, rows)


def _grouplike_delta(obj):
    return vb.VMorphism.from_basis_map(obj, vb.tensor_obj(obj, obj),
                                       lambda w: w + w)


def _counit_row(obj):
    return vb.VMorphism(obj, vb.unit_object(), [[vb.ONE] * obj.dim])


def _load_braiding(doc, path):
    value = _fraction(doc.get("q", "1"), path + ".q")
    if value == 0:
        _fail(path + ".q", "braiding parameter must be nonzero")
    return VectBackend(vb.BraidParam(value))


def _comonoid_blocks(doc, keys, label_of, lookup, path):
    """Shared delta/eps handling for both graded kinds.

    keys lists the structure keys (elements, or object pairs), label_of
    maps a key to its graded object, and lookup resolves document
    entries and their JSON paths.  Returns (delta, eps, synthesized)."""
    grouplike = doc.get("grouplike", False)
    if grouplike is not False and grouplike is not True:
        _fail(path + ".grouplike", "expected true or false")
    if grouplike:
        if "delta" in doc or "eps" in doc:
            _fail(path, "grouplike cannot be combined with explicit "
                        "delta/eps")
        delta = {key: _grouplike_delta(label_of(key)) for key in keys}
        eps = {key: _counit_row(label_of(key)) for key in keys}
        return delta, eps, True
    if "delta" not in doc and "eps" not in doc:
        return None, None, False
    if "delta" not in doc or "eps" not in doc:
        _fail(path, "delta and eps must be given together")
    delta = {}
    eps = {}
    for key in keys:
        obj = label_of(key)
        delta[key] = _vmorphism(lookup("delta", key), obj,
                                vb.tensor_obj(obj, obj),
                                lookup.path("delta", key))
        eps[key] = _vmorphism(lookup("eps", key), obj,
                              vb.unit_object(), lookup.path("eps", key))
    return delta, eps, False


class _NestedLookup:
    """Reads nested mapping blocks like doc["mu"][a][b] while tracking
    the JSON path, validating exact key coverage level by level."""

    def __init__(self, doc, root, levels):
        self.doc = doc
        self.root = root
        self.levels = levels

    def validate(self, name):
        block = _require_mapping(self.doc[name], "%s.%s" % (self.root, name))
        frontier = [(block, "%s.%s" % (self.root, name))]
        for depth, level in enumerate(self.levels):
            nxt = []
            for mapping, where in frontier:
                _exact_keys(mapping, level, where)
                for key in level:
                    nxt.append((mapping[key], "%s.%s" % (where, key)))
            if depth < len(self.levels) - 1:
                nxt = [(_require_mapping(m, w), w) for m, w in nxt]
            frontier = nxt

    def __call__(self, name, key):
        value = self.doc[name]
        for part in key if isinstance(key, tuple) else (key,):
            value = value[part]
        return value

    def path(self, name, key):
        parts = key if isinstance(key, tuple) else (key,)
        return "%s.%s.%s" % (self.root, name, ".".join(parts))


@dataclass
class LoadedFile:
    kind: str
    document: dict
    presentation: object
    monad: object
    comonoid: object
    synthesized: bool
    probes: tuple = ()


_GROUP_REQUIRED = ("format_version", "kind", "backend", "elements", "unit",
                   "table", "labels", "mu", "eta")
_GROUP_OPTIONAL = ("q", "grouplike", "delta", "eps", "antipode")


def _load_group(doc, path):
    _check_keys(doc, _GROUP_REQUIRED, _GROUP_OPTIONAL, path)
    if doc["backend"] != "vect":
        _fail(path + ".backend", "kind group_monoid needs the vect backend")
    elements = _atom_list(doc["elements"], path + ".elements")
    unit = doc["unit"]
    if unit not in elements:
        _fail(path + ".unit", "unit %r is not a declared element" % (unit,))
    table = _require_mapping(doc["table"], path + ".table")
    _exact_keys(table, elements, path + ".table")
    mul = {}
    for a in elements:
        row = _require_mapping(table[a], "%s.table.%s" % (path, a))
        _exact_keys(row, elements, "%s.table.%s" % (path, a))
        for b in elements:
            value = row[b]
            if value not in elements:
                _fail("%s.table.%s.%s" % (path, a, b),
                      "product %r is not a declared element" % (value,))
            mul[(a, b)] = value
    for a in elements:
        if mul[(unit, a)] != a or mul[(a, unit)] != a:
            _fail(path + ".table", "unit law fails at %r" % (a,))
    for a in elements:
        for b in elements:
            for c in elements:
                if mul[(mul[(a, b)], c)] != mul[(a, mul[(b, c)])]:
                    _fail(path + ".table",
                          "not associative at %r" % ((a, b, c),))
    labels_doc = _require_mapping(doc["labels"], path + ".labels")
    _exact_keys(labels_doc, elements, path + ".labels")
    labels = {a: _vobject(labels_doc[a], "%s.labels.%s" % (path, a))
              for a in elements}
    backend = _load_braiding(doc, path)
    lookup = _NestedLookup(doc, path, [elements, elements])
    lookup.validate("mu")
    mu = {}
    for a in elements:
        for b in elements:
            mu[(a, b)] = _vmorphism(lookup("mu", (a, b)),
                                    vb.tensor_obj(labels[a], labels[b]),
                                    labels[mul[(a, b)]],
                                    lookup.path("mu", (a, b)))
    eta = _vmorphism(doc["eta"], vb.unit_object(), labels[unit],
                     path + ".eta")
    flat = _NestedLookup(doc, path, [elements])
    if "delta" in doc:
        flat.validate("delta")
    if "eps" in doc:
        flat.validate("eps")
    delta, eps, synthesized = _comonoid_blocks(doc, elements,
                                               labels.__getitem__, flat, path)
    fam = None
    if "antipode" in doc:
        inverses = hs._monoid_inverses(elements, mul, unit)
        if inverses is None:
            _fail(path + ".antipode",
                  "an antipode block needs every element invertible")
        flat.validate("antipode")
        fam = hs.AntipodeFamily(
            {a: _vmorphism(flat("antipode", a), labels[a],
                           labels[inverses[a]], flat.path("antipode", a))
             for a in elements})
    pres = hs.GroupMonoidPresentation(backend, FinSet(elements), mul, unit,
                                      labels, mu, eta, delta, eps, fam)
    try:
        monad = pres.monad_presentation()
    except SpanVError as error:
        _fail(path, str(error))
    comonoid = pres.comonoid_structure() if delta is not None else None
    return LoadedFile("group_monoid", doc, pres, monad, comonoid, synthesized)


_ENRICHED_REQUIRED = ("format_version", "kind", "backend", "objects", "hom",
                      "mu", "eta")
_ENRICHED_OPTIONAL = ("q", "grouplike", "delta", "eps", "antipode")


def _load_enriched(doc, path):
    _check_keys(doc, _ENRICHED_REQUIRED, _ENRICHED_OPTIONAL, path)
    if doc["backend"] != "vect":
        _fail(path + ".backend",
              "kind enriched_category needs the vect backend")
    objects = _atom_list(doc["objects"], path + ".objects")
    pairs = [(x, y) for x in objects for y in objects]
    nested = _NestedLookup(doc, path, [objects, objects])
    nested.validate("hom")
    hom = {(x, y): _vobject(nested("hom", (x, y)), nested.path("hom", (x, y)))
           for (x, y) in pairs}
    backend = _load_braiding(doc, path)
    triple = _NestedLookup(doc, path, [objects, objects, objects])
    triple.validate("mu")
    mu = {}
    for x in objects:
        for y in objects:
            for z in objects:
                mu[(x, y, z)] = _vmorphism(
                    triple("mu", (x, y, z)),
                    vb.tensor_obj(hom[(x, y)], hom[(y, z)]),
                    hom[(x, z)], triple.path("mu", (x, y, z)))
    flat = _NestedLookup(doc, path, [objects])
    flat.validate("eta")
    eta = {x: _vmorphism(flat("eta", x), vb.unit_object(), hom[(x, x)],
                         flat.path("eta", x))
           for x in objects}
    if "delta" in doc:
        nested.validate("delta")
    if "eps" in doc:
        nested.validate("eps")
    delta, eps, synthesized = _comonoid_blocks(doc, pairs, hom.__getitem__,
                                               nested, path)
    fam = None
    if "antipode" in doc:
        nested.validate("antipode")
        fam = hs.AntipodeFamily(
            {(x, y): _vmorphism(nested("antipode", (x, y)), hom[(x, y)],
                                hom[(y, x)], nested.path("antipode", (x, y)))
             for (x, y) in pairs})
    pres = hs.EnrichedCatPresentation(backend, FinSet(objects), hom, mu, eta,
                                      delta, eps, fam)
    try:
        monad = pres.monad_presentation()
    except SpanVError as error:
        _fail(path, str(error))
    comonoid = pres.comonoid_structure() if delta is not None else None
    return LoadedFile("enriched_category", doc, pres, monad, comonoid,
                      synthesized)


_POLYAD_REQUIRED = ("format_version", "kind", "backend", "construction",
                    "probes", "source")


def _load_probes_doc(value, path):
    if not isinstance(value, list) or not value:
        _fail(path, "expected a nonempty list of probe objects")
    return tuple(_vobject(entry, "%s[%d]" % (path, i))
                 for i, entry in enumerate(value))


def _load_polyad(doc, path):
    _check_keys(doc, _POLYAD_REQUIRED, (), path)
    if doc["backend"] != "cat":
        _fail(path + ".backend", "kind polyad needs the cat backend")
    if doc["construction"] != "tensor_image":
        _fail(path + ".construction",
              "unknown construction %r" % (doc["construction"],))
    probes = _load_probes_doc(doc["probes"], path + ".probes")
    source = load_document(doc["source"], path + ".source")
    if source.comonoid is None:
        _fail(path + ".source", "a polyad export needs delta and eps "
                                "(grouplike: true also works)")
    return LoadedFile("polyad", doc, source.presentation, source.monad,
                      source.comonoid, source.synthesized, probes)


def load_document(doc, path="$"):
    doc = _require_mapping(doc, path)
    if "format_version" not in doc:
        _fail(path, "missing required field 'format_version'")
    version = doc["format_version"]
    if isinstance(version, bool) or version != FORMAT_VERSION:
        _fail(path + ".format_version", "unsupported version %r" % (version,))
    kind = doc.get("kind")
    if kind == "group_monoid":
        return _load_group(doc, path)
    if kind == "enriched_category":
        return _load_enriched(doc, path)
    if kind == "polyad":
        if path != "$":
            _fail(path + ".kind", "a polyad cannot embed another polyad")
        return _load_polyad(doc, path)
    _fail(path + ".kind", "unknown kind %r" % (kind,))


def _read_json(filename):
    try:
        with open(filename, "r") as handle:
            text = handle.read()
    except OSError as error:
        raise InputError("%s: %s" % (filename, error.strerror or error))
    try:
        return json.loads(text)
    except json.JSONDecodeError as error:
        raise InputError("%s: invalid JSON: %s" % (filename, error))


def load_path(filename):
    return load_document(_read_json(filename))


def canonical_json(value):
    return json.dumps(value, sort_keys=True, indent=2) + "\n"


# ---------------------------------------------------------------------------
# The check pipeline.


def _det(entries):
    """Exact determinant of a square fraction matrix, None off-square."""
    n = len(entries)
    if any(len(row) != n for row in entries):
        return None
    m = [list(row) for row in entries]
    result = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            result = -result
        result *= m[col][col]
        for r in range(col + 1, n):
            factor = m[r][col] / m[col][col]
            for c in range(col, n):
                m[r][c] -= factor * m[col][c]
    return result


def _fusion_determinants(loaded):
    """Component determinants of both fusion 2-cells, keyed by the pair
    of shape morphisms being fused; off-square components print null."""
    out = {}
    for side, builder in (("left", hs.left_fusion),
                          ("right", hs.right_fusion)):
        cell = builder(loaded.monad, loaded.comonoid)
        rows = []
        for atom in cell.source.span.apex:
            if side == "left":
                pair = (atom[0][0], atom[1][0])
            else:
                pair = (atom[0][0], atom[1][1])
            det = _det(cell.components[atom].entries)
            rows.append([repr(pair), None if det is None else str(det)])
        rows.sort(key=lambda item: item[0])
        out[side] = rows
    return out


def _selected_checks(loaded, args):
    explicit = [name for name in _CHECK_ORDER if getattr(args, name)]
    if explicit:
        if loaded.kind != "polyad":
            for name in explicit:
                if name in _NEEDS_COMONOID and loaded.comonoid is None:
                    raise InputError(
                        "the %s check needs delta and eps "
                        "(grouplike: true also works)" % name)
                if (name in _NEEDS_ANTIPODE
                        and loaded.presentation.antipode is None):
                    raise InputError(
                        "the %s check needs an antipode block" % name)
        return explicit
    if loaded.kind == "polyad":
        return list(_POLYAD_CHECKS)
    names = ["monad"]
    if loaded.comonoid is not None:
        names += ["opmonoidal", "hopf"]
        if loaded.presentation.antipode is not None:
            names += ["antipode", "duoidal"]
    names.append("frobenius")
    return names


def _execute_check(loaded, name, cache):
    """Run one named check; returns (failures, extra report fields)."""
    if loaded.kind == "polyad":
        if "report" not in cache:
            report, _, _ = hs.image_polyad_report(loaded.presentation,
                                                  list(loaded.probes))
            cache["report"] = report
        failures = cache["report"].failures
        if name == "monad":
            return [f for f in failures if f[0] in _MONAD_LAWS], {}
        return [f for f in failures if f[0] not in _MONAD_LAWS], {}
    if name == "monad":
        return hs.check_monad(loaded.monad).failures, {}
    if name == "opmonoidal":
        return hs.check_opmonoidal(loaded.monad, loaded.comonoid).failures, {}
    if name == "hopf":
        verdict = hs.is_hopf(loaded.monad, loaded.comonoid)
        failures = [] if verdict else [("fusion invertible", verdict.witness)]
        return failures, {"fusion_determinants": _fusion_determinants(loaded)}
    if name == "antipode":
        if loaded.kind == "group_monoid":
            return hs.check_antipode_group(loaded.presentation).failures, {}
        return hs.check_antipode_enriched(loaded.presentation).failures, {}
    if name == "duoidal":
        return hs.check_antipode_duoidal(loaded.presentation).failures, {}
    carrier = FinSet(list(loaded.monad.shape.objects))
    return check_frobenius(carrier, loaded.presentation.backend).failures, {}


def _run_check_suite(loaded, selected):
    entries = []
    failed = set()
    cache = {}
    for name in _CHECK_ORDER:
        if name not in selected:
            continue
        entry = {"name": name}
        if loaded.kind == "polyad" and name not in _POLYAD_CHECKS:
            entry["status"] = "skipped"
            entry["reason"] = "not available for kind polyad"
            entries.append(entry)
            continue
        blocker = next((b for b in _CHAIN_BLOCKERS[name] if b in failed),
                       None)
        if blocker is not None:
            entry["status"] = "skipped"
            entry["reason"] = "%s failed" % blocker
            entries.append(entry)
            continue
        failures, extras = _execute_check(loaded, name, cache)
        if failures:
            entry["status"] = "fail"
            entry["failures"] = [[law, repr(witness)]
                                 for law, witness in failures]
            failed.add(name)
        else:
            entry["status"] = "pass"
        entry.update(extras)
        entries.append(entry)
    ok = all(entry["status"] != "fail" for entry in entries)
    return entries, ok


def _check_text(report, seed, elapsed):
    lines = ["kind: %s" % report["kind"]]
    if report["synthesized_grouplike_comonoid"]:
        lines.append("note: grouplike comonoid synthesized from the basis")
    for entry in report["checks"]:
        if entry["status"] == "skipped":
            lines.append("%s: skipped (%s)" % (entry["name"],
                                               entry["reason"]))
            continue
        lines.append("%s: %s" % (entry["name"], entry["status"]))
        for law, witness in entry.get("failures", []):
            lines.append("  %s at %s" % (law, witness))
        for side in ("left", "right"):
            for pair, det in entry.get("fusion_determinants",
                                       {}).get(side, []):
                lines.append("  %s fusion determinant at %s: %s"
                             % (side, pair, "n/a" if det is None else det))
    lines.append("overall: %s" % report["status"])
    if seed is not None:
        lines.append("seed: %d" % seed)
    lines.append("elapsed: %.3fs" % elapsed)
    return "\n".join(lines) + "\n"


def cmd_check(args):
    start = time.monotonic()
    loaded = load_path(args.file)
    selected = _selected_checks(loaded, args)
    entries, ok = _run_check_suite(loaded, selected)
    report = {
        "format_version": FORMAT_VERSION,
        "command": "check",
        "kind": loaded.kind,
        "synthesized_grouplike_comonoid": loaded.synthesized,
        "checks": entries,
        "status": "pass" if ok else "fail",
    }
    if args.format == "json":
        sys.stdout.write(canonical_json(report))
    else:
        sys.stdout.write(_check_text(report, args.seed,
                                     time.monotonic() - start))
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# Antipode solving and polyad export.


def _matrix_doc(mor):
    return [[str(value) for value in row] for row in mor.entries]


def _sigma_document(loaded, fam):
    if loaded.kind == "group_monoid":
        return {a: _matrix_doc(fam.sigma[a])
                for a in loaded.presentation.elements}
    out = {}
    for (x, y), mor in fam.sigma.items():
        out.setdefault(x, {})[y] = _matrix_doc(mor)
    return out


def cmd_antipode(args):
    start = time.monotonic()
    loaded = load_path(args.file)
    if loaded.kind == "polyad":
        raise InputError("antipode solving needs a graded presentation, "
                         "not a polyad export")
    if loaded.comonoid is None:
        raise InputError("computing an antipode needs delta and eps "
                         "(grouplike: true also works)")
    result = hs.compute_antipode(loaded.presentation)
    report = {
        "format_version": FORMAT_VERSION,
        "command": "antipode",
        "kind": loaded.kind,
        "status": "pass" if result else "fail",
    }
    if not result:
        report["witness"] = repr(result.witness)
        if args.format == "json":
            sys.stdout.write(canonical_json(report))
        else:
            sys.stdout.write("antipode: fail\n  %s\nelapsed: %.3fs\n"
                             % (report["witness"], time.monotonic() - start))
        return 1
    report["sigma"] = _sigma_document(loaded, result.family)
    if args.format == "json":
        sys.stdout.write(canonical_json(report))
    else:
        lines = ["antipode: pass"]
        for key in sorted(report["sigma"]):
            block = report["sigma"][key]
            if isinstance(block, dict):
                for inner in sorted(block):
                    lines.append("sigma %s %s:" % (key, inner))
                    lines += ["  " + " ".join(row) for row in block[inner]]
            else:
                lines.append("sigma %s:" % key)
                lines += ["  " + " ".join(row) for row in block]
        lines.append("elapsed: %.3fs" % (time.monotonic() - start))
        sys.stdout.write("\n".join(lines) + "\n")
    return 0


def cmd_export_polyad(args):
    start = time.monotonic()
    loaded = load_path(args.file)
    if loaded.kind == "polyad":
        raise InputError("the file is already a polyad export; pass the "
                         "graded source presentation")
    if loaded.comonoid is None:
        raise InputError("a polyad export needs delta and eps "
                         "(grouplike: true also works)")
    probes_doc = _read_json(args.probes)
    probes = _load_probes_doc(probes_doc, args.probes)
    report, _, _ = hs.image_polyad_report(loaded.presentation, list(probes))
    if not report.ok:
        out = {
            "format_version": FORMAT_VERSION,
            "command": "export-polyad",
            "kind": loaded.kind,
            "status": "fail",
            "failures": [[law, repr(witness)]
                         for law, witness in report.failures],
        }
        if args.format == "json":
            sys.stdout.write(canonical_json(out))
        else:
            lines = ["export-polyad: fail"]
            lines += ["  %s at %s" % (law, witness)
                      for law, witness in out["failures"]]
            lines.append("elapsed: %.3fs" % (time.monotonic() - start))
            sys.stdout.write("\n".join(lines) + "\n")
        return 1
    document = {
        "format_version": FORMAT_VERSION,
        "kind": "polyad",
        "backend": "cat",
        "construction": "tensor_image",
        "probes": probes_doc,
        "source": loaded.document,
    }
    text = canonical_json(document)
    if args.output:
        with open(args.output, "w") as handle:
            handle.write(text)
        if args.format == "text":
            sys.stdout.write("wrote polyad export to %s (verified on %d "
                             "probes, %.3fs)\n"
                             % (args.output, len(probes),
                                time.monotonic() - start))
    else:
        sys.stdout.write(text)
        if args.format == "text":
            sys.stderr.write("verified on %d probes (%.3fs)\n"
                             % (len(probes), time.monotonic() - start))
    return 0


# ---------------------------------------------------------------------------
# Argument wiring.


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="hopfspan",
        description="Check presentation files for monad, bimonoid and "
                    "antipode laws over the span workbench.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="text",
                        help="canonical machine json or human text")
    common.add_argument("--seed", type=int, default=None,
                        help="echoed in the text report; every checker "
                             "is deterministic")
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser(
        "check", parents=[common],
        help="run law checkers against a presentation file")
    check.add_argument("file")
    check.add_argument("--monad", action="store_true",
                       help="associativity and unit laws")
    check.add_argument("--opmonoidal", action="store_true",
                       help="bimonoid compatibility squares")
    check.add_argument("--hopf", action="store_true",
                       help="invertibility of both fusion 2-cells")
    check.add_argument("--antipode", action="store_true",
                       help="componentwise antipode squares for the "
                            "family in the file")
    check.add_argument("--duoidal", action="store_true",
                       help="assembled antipode squares, compared with "
                            "the componentwise verdict")
    check.add_argument("--frobenius", action="store_true",
                       help="comparison cells of the base adjunctions")
    check.set_defaults(func=cmd_check)

    export = sub.add_parser(
        "export-polyad", parents=[common],
        help="re-package a graded presentation as a pointwise tensor "
             "image and verify it on probes")
    export.add_argument("file")
    export.add_argument("--probes", required=True,
                        help="json file listing probe objects")
    export.add_argument("--output", default=None,
                        help="write the export here instead of stdout")
    export.set_defaults(func=cmd_export_polyad)

    antipode = sub.add_parser(
        "antipode", parents=[common],
        help="solve the antipode squares and print the family")
    antipode.add_argument("file")
    antipode.set_defaults(func=cmd_antipode)
    return parser


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as error:
        sys.stderr.write("error: %s\n" % error)
        return 2


if __name__ == "__main__":
    sys.exit(main())
