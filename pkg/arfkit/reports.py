"""
Reports produced by the command line tool.

A Report is an ordered list of (key, value) pairs plus an optional
verdict.  The same report renders as indented text or as JSON with
stable field names; neither form contains timestamps or anything else
that changes between runs.
"""

import json

import attr

from arfkit.base import constants, settings
from arfkit.base.exceptions import DocumentInvariantError
from arfkit.core import enhanced, lattice, quadspace, rochlin, seifert


HOLDS = "holds"
FAILS = "fails"


@attr.s(slots=True)
class Report(object):
    source = attr.ib()
    command = attr.ib()
    name = attr.ib(default=None)
    values = attr.ib(default=attr.Factory(list))
    notes = attr.ib(default=attr.Factory(list))
    verdict = attr.ib(default=None)

    def add(self, key, value, note=None):
        self.values.append((key, value))
        if note is not None:
            self.notes.append((key, note))

    @property
    def failed(self):
        return self.verdict is False


def expect_kind(document, *kinds):
    if document.kind not in kinds:
        raise DocumentInvariantError("Expected a document of kind {}, got {}".format(
            " or ".join(kinds), document.kind), field="kind")


def _json_value(value):
    if hasattr(value, "label"):
        return value.label()
    if isinstance(value, tuple):
        return list(value)
    return value


def _text_value(value):
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, (list, tuple)):
        return "(" + ", ".join(str(v) for v in value) + ")"
    if value is None:
        return "-"
    return str(value)


def _residual(report, residual):
    report.add("residual", residual.value)
    report.add("modulus", residual.modulus)
    report.verdict = residual.holds


###############################################################################
# Command handlers
###############################################################################


def report_arf(report, document):
    expect_kind(document, "quadratic_space", "seifert")
    if document.kind == "seifert":
        sd = document.payload
        space = seifert.quadratic_space_of(sd)
        proper = seifert.properness_of(sd)
    else:
        space = document.payload
        proper = quadspace.is_proper(space)

    arf = quadspace.arf_symplectic(space)
    report.add("dim", space.dim)
    report.add("radical_dim", len(quadspace.radical(space)))
    report.add("proper", proper)

    note = None
    if not proper:
        note = "link not proper" if document.kind == "seifert" else "space not proper"
    report.add("arf", arf, note=note)

    if document.kind == "seifert" and document.payload.components == 1:
        report.add("alexander", str(seifert.alexander_polynomial(document.payload).as_expr()))


def report_brown(report, document):
    expect_kind(document, "enhanced_space", "surface")
    if document.kind == "surface":
        surf = document.payload
        space = seifert.enhanced_space_of(surf)
    else:
        space = document.payload

    beta = enhanced.brown_gauss(space)
    report.add("dim", space.dim)
    report.add("proper", enhanced.is_proper_e(space))
    report.add("gauss_sum", enhanced.gauss_sum(space))
    report.add("brown", beta, note=None if not beta.is_infinite() else "space not proper")

    if document.kind == "surface":
        report.add("phi", surf.phi)
        link_beta = seifert.beta_of_link(surf)
        report.add("brown_link", link_beta,
                   note=None if not link_beta.is_infinite() else "link not proper")


def report_classify(report, document):
    expect_kind(document, "quadratic_space", "seifert")
    space = document.payload
    if document.kind == "seifert":
        space = seifert.quadratic_space_of(space)
    cls = quadspace.classify(space)
    report.add("dim", cls.dim)
    report.add("radical_dim", cls.rad_dim)
    report.add("arf", cls.arf)


def _lattice_of(document):
    expect_kind(document, "lattice", "even_presentation")
    if document.kind == "even_presentation":
        return document.payload.lam
    return document.payload


def report_signature(report, document):
    l = _lattice_of(document)
    report.add("rank", l.dim)
    report.add("determinant", lattice.determinant(l))
    report.add("unimodular", lattice.is_unimodular(l))
    report.add("even", lattice.is_even(l))
    report.add("signature", lattice.signature(l))


def report_charvec(report, document):
    l = _lattice_of(document)
    xi = lattice.characteristic_vector(l)
    sigma = lattice.signature(l)
    report.add("xi", xi.xi)
    report.add("xi_square", lattice.norm(l, xi))
    report.add("signature", sigma)
    report.verdict = lattice.check_van_der_blij(l, xi)


def report_mu(report, document):
    expect_kind(document, "even_presentation")
    p = document.payload
    report.add("signature", lattice.signature(p.lam))
    report.add("mu", rochlin.mu_from_presentation(p))


def report_surgery_mu(report, document, alpha):
    expect_kind(document, "seifert")
    report.add("alpha", alpha)
    report.add("arf", seifert.arf_of_link(document.payload))
    report.add("mu", rochlin.mu_from_surgery(document.payload, alpha))


def report_verify_closed(report, document):
    expect_kind(document, "closed_scenario")
    c = document.payload
    report.add("surface", c.surface)
    report.add("sigma", c.sigma)
    report.add("xi_square" if c.orientable else "f_dot_f", c.square)
    report.add("arf" if c.orientable else "brown", c.invariant)
    report.add("ks", c.ks)
    _residual(report, rochlin.verify_closed_scenario(c))


def report_verify_relative(report, document):
    expect_kind(document, "scenario")
    s = document.payload
    report.add("surface", s.surface)
    report.add("sigma_x", s.sigma_x)
    report.add("f_square", s.f_square)
    report.add("surface_invariant", s.surface_invariant)
    report.add("boundary_invariant", s.boundary_invariant)
    report.add("mu_boundary", s.mu_boundary)
    report.add("ks", s.ks)
    _residual(report, rochlin.verify_relative(s))


def report_relation_check(report, seifert_document, surface_document):
    expect_kind(seifert_document, "seifert")
    expect_kind(surface_document, "surface")
    sd = seifert_document.payload
    surf = surface_document.payload

    report.add("arf", seifert.arf_of_link(sd))
    report.add("brown_link", seifert.beta_of_link(surf))
    report.add("lk_total", seifert.lk_total(sd))
    report.verdict = seifert.arf_beta_relation_check(sd, surf)


def report_planar_check(report, document):
    expect_kind(document, "surface")
    beta = seifert.beta_of_link(document.payload)
    report.add("brown_link", beta)
    if beta.is_infinite():
        raise DocumentInvariantError("Link is not proper, so it has no Brown invariant",
                                     field="evals")
    _residual(report, rochlin.verify_relative(rochlin.build_planar_scenario(beta)))


###############################################################################
# Rendering
###############################################################################


def verdict_label(verdict):
    if verdict is None:
        return None
    return HOLDS if verdict else FAILS


def to_dict(report):
    result = {
        "source": report.source,
        "command": report.command,
        "values": dict((k, _json_value(v)) for k, v in report.values),
    }
    if report.name is not None:
        result["name"] = report.name
    if report.verdict is not None:
        result["verdict"] = verdict_label(report.verdict)
    return result


# Labels used in text reports; JSON reports keep the raw keys.
TEXT_LABELS = {
    "arf": "Arf",
    "brown": "Brown",
    "brown_link": "Brown(L)",
    "gauss_sum": "Gauss sum",
    "radical_dim": "radical dim",
    "lk_total": "lk(L)",
    "alexander": "Alexander",
}

# Shown only through the verdict line.
VERDICT_KEYS = ("residual", "modulus")


def render_text(report):
    header = report.source
    if report.name is not None:
        header = "{} ({})".format(header, report.name)

    notes = dict(report.notes)
    values = dict(report.values)
    lines = [header]
    for key, value in report.values:
        if key in VERDICT_KEYS:
            continue
        line = "  {} = {}".format(TEXT_LABELS.get(key, key), _text_value(value))
        if key in notes:
            line += " ({})".format(notes[key])
        lines.append(line)

    if report.verdict is not None:
        verdict = verdict_label(report.verdict)
        if "residual" in values:
            verdict += " (residual {} mod {})".format(values["residual"], values["modulus"])
        lines.append("  " + verdict)
    return "\n".join(lines)


def render_json(entries):
    return json.dumps(entries, sort_keys=True, indent=settings.JSON_INDENT, ensure_ascii=False)


def error_entry(source, error):
    entry = {"source": source, "error": str(error), "status": constants.EXIT_INPUT_ERROR}
    for attribute in ("field", "line", "column"):
        value = getattr(error, attribute, None)
        if value is not None:
            entry[attribute] = value
    return entry
