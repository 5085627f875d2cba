"""
Input documents: UTF-8 JSON objects with a "kind" field.

Parsing goes through three stages, each with its own error class:

    1. JSON syntax (DocumentSyntaxError, with line and column).  Numbers
       must be exact integers; 1.5, 1e3 and NaN are syntax errors.
    2. The "kind" field (UnknownKindError) and the kind's JSON schema
       shipped in arfkit/schemas/document.json.
    3. The constructor of the payload type, which checks the algebraic
       invariants (DocumentInvariantError naming the field).

serialize() writes the canonical form, and parse(serialize(d)) == d.
"""

import contextlib
import json
import os

import attr
import jsonschema

from arfkit.base import constants, settings
from arfkit.base.exceptions import (ArfkitException, DocumentError,
                                    DocumentInvariantError,
                                    DocumentSyntaxError, UnknownKindError)
from arfkit.core.enhanced import BrownValue, EnhancedSpace
from arfkit.core.f2core import F2Matrix
from arfkit.core.lattice import IntLattice
from arfkit.core.quadspace import ArfValue, QuadraticSpace
from arfkit.core.rochlin import ClosedScenario, EvenPresentation, RelativeScenario
from arfkit.core.seifert import SeifertData, SurfaceData


@attr.s(frozen=True, slots=True)
class InputDocument(object):
    kind = attr.ib()
    payload = attr.ib()
    name = attr.ib(default=None)


_schema = None


def load_schema():
    global _schema
    if _schema is None:
        schema_path = os.path.join(os.path.dirname(__file__), 'schemas', 'document.json')
        with open(schema_path, 'r') as source:
            _schema = json.load(source)
    return _schema


def kind_validator(kind):
    schema = load_schema()
    subschema = dict(schema['kinds'][kind])
    subschema['definitions'] = schema['definitions']
    return jsonschema.Draft4Validator(subschema)


def _reject_float(text):
    raise DocumentSyntaxError("Number {} is not an exact integer".format(text))


def _reject_constant(text):
    raise DocumentSyntaxError("{} is not allowed in documents".format(text))


@contextlib.contextmanager
def invariant(field):
    """
    Turn errors raised by a payload constructor into a
    DocumentInvariantError for the given field.
    """
    try:
        yield
    except DocumentError:
        raise
    except ArfkitException as error:
        raise DocumentInvariantError("{}: {}".format(field, error), field=field)


def _invariant_value(tag, value):
    if tag == constants.ORIENTABLE:
        return ArfValue.parse(value)
    return BrownValue.parse(value)


def _label(value):
    return value.label()


###############################################################################
# Builders and writers, one pair per kind
###############################################################################


def build_quadratic_space(doc):
    with invariant('gram'):
        return QuadraticSpace(doc['gram'], doc['qvals'])


def write_quadratic_space(space):
    return {'gram': space.gram.tolist(), 'qvals': list(space.qvals)}


def build_enhanced_space(doc):
    with invariant('gram'):
        return EnhancedSpace(doc['gram'], doc['evals'])


def write_enhanced_space(space):
    return {'gram': space.gram.tolist(), 'evals': list(space.evals)}


def build_seifert(doc):
    with invariant('seifert_matrix'):
        return SeifertData(doc['seifert_matrix'],
                           components=doc.get('components', 1),
                           lk=doc.get('lk'))


def write_seifert(sd):
    result = {'seifert_matrix': [list(row) for row in sd.v], 'components': sd.components}
    if sd.lk is not None:
        result['lk'] = [list(row) for row in sd.lk]
    return result


def build_surface(doc):
    with invariant('gram'):
        gram = F2Matrix(doc['gram'])
    with invariant('evals'):
        return SurfaceData(evals=doc['evals'],
                           gram=gram,
                           boundary_framing_sum=doc['boundary_framing_sum'],
                           components=doc.get('components'))


def write_surface(surf):
    result = {
        'evals': list(surf.evals),
        'gram': surf.gram.tolist(),
        'boundary_framing_sum': surf.boundary_framing_sum
    }
    if surf.components is not None:
        result['components'] = surf.components
    return result


def build_lattice(doc):
    with invariant('form'):
        return IntLattice(doc['form'])


def write_lattice(l):
    return {'form': l.tolist()}


def build_even_presentation(doc):
    with invariant('linking_matrix'):
        return EvenPresentation(doc['linking_matrix'])


def write_even_presentation(p):
    return {'linking_matrix': p.lam.tolist()}


def build_scenario(doc):
    tag = doc['surface']
    with invariant('surface_invariant'):
        surface_invariant = _invariant_value(tag, doc['surface_invariant'])
    with invariant('boundary_invariant'):
        boundary_invariant = _invariant_value(tag, doc['boundary_invariant'])
    with invariant('surface'):
        return RelativeScenario(sigma_x=doc['sigma_x'],
                                f_square=doc['f_square'],
                                surface=tag,
                                surface_invariant=surface_invariant,
                                boundary_invariant=boundary_invariant,
                                mu_boundary=doc.get('mu_boundary', 0),
                                ks=doc.get('ks', 0))


def write_scenario(s):
    return {
        'sigma_x': s.sigma_x,
        'f_square': s.f_square,
        'surface': s.surface,
        'surface_invariant': _label(s.surface_invariant),
        'boundary_invariant': _label(s.boundary_invariant),
        'mu_boundary': s.mu_boundary,
        'ks': s.ks
    }


def _square_field(tag):
    return 'xi_square' if tag == constants.ORIENTABLE else 'f_dot_f'


def build_closed_scenario(doc):
    tag = doc['surface']
    field = _square_field(tag)
    other = _square_field(constants.NONORIENTABLE if tag == constants.ORIENTABLE
                          else constants.ORIENTABLE)
    if field not in doc:
        raise DocumentInvariantError("{}: required for an {} surface".format(field, tag),
                                     field=field)
    if other in doc:
        raise DocumentInvariantError("{}: not allowed for an {} surface".format(other, tag),
                                     field=other)

    with invariant('invariant'):
        value = _invariant_value(tag, doc['invariant'])
        return ClosedScenario(sigma=doc['sigma'],
                              square=doc[field],
                              surface=tag,
                              invariant=value,
                              ks=doc.get('ks', 0))


def write_closed_scenario(c):
    return {
        'sigma': c.sigma,
        _square_field(c.surface): c.square,
        'surface': c.surface,
        'invariant': _label(c.invariant),
        'ks': c.ks
    }


KIND_HANDLERS = {
    'quadratic_space': (build_quadratic_space, write_quadratic_space),
    'enhanced_space': (build_enhanced_space, write_enhanced_space),
    'seifert': (build_seifert, write_seifert),
    'surface': (build_surface, write_surface),
    'lattice': (build_lattice, write_lattice),
    'even_presentation': (build_even_presentation, write_even_presentation),
    'scenario': (build_scenario, write_scenario),
    'closed_scenario': (build_closed_scenario, write_closed_scenario),
}


###############################################################################
# Entry points
###############################################################################


def load_json(document_text):
    if isinstance(document_text, bytes):
        try:
            document_text = document_text.decode('utf-8')
        except UnicodeDecodeError as error:
            raise DocumentSyntaxError("Document is not UTF-8: {}".format(error))

    try:
        return json.loads(document_text,
                          parse_float=_reject_float,
                          parse_constant=_reject_constant)
    except ValueError as error:
        # JSONDecodeError carries the position of the problem.
        raise DocumentSyntaxError("Invalid JSON: {}".format(getattr(error, 'msg', error)),
                                  line=getattr(error, 'lineno', None),
                                  column=getattr(error, 'colno', None))
    except RecursionError:
        raise DocumentSyntaxError("Document is nested too deeply")


def parse(document_text):
    """
    Parse a document (str or UTF-8 bytes) into an InputDocument.

    Raises a DocumentError subclass on any problem; never anything else.
    """
    doc = load_json(document_text)

    if not isinstance(doc, dict):
        raise DocumentSyntaxError("Top level of a document must be a JSON object")

    kind = doc.get('kind')
    if kind is None:
        raise UnknownKindError("Document has no \"kind\" field", field='kind')
    if not isinstance(kind, str) or kind not in KIND_HANDLERS:
        raise UnknownKindError("Unknown kind {!r}; expected one of {}".format(
            kind, ", ".join(constants.DOCUMENT_KINDS)), field='kind')

    errors = sorted(kind_validator(kind).iter_errors(doc), key=str)
    if errors:
        error = errors[0]
        field = "/".join(str(p) for p in error.path) or None
        raise DocumentInvariantError("{}: {}".format(field or kind, error.message), field=field)

    build, _ = KIND_HANDLERS[kind]
    payload = build(doc)
    return InputDocument(kind=kind, payload=payload, name=doc.get('name'))


def to_dict(document):
    _, write = KIND_HANDLERS[document.kind]
    result = write(document.payload)
    result['kind'] = document.kind
    if document.name is not None:
        result['name'] = document.name
    return result


def serialize(document):
    return json.dumps(to_dict(document), sort_keys=True, indent=settings.JSON_INDENT,
                      ensure_ascii=False) + "\n"


def read_document(path):
    """
    Read and parse a document file.  Unreadable files raise
    DocumentSyntaxError as well, so callers see a single error family.
    """
    try:
        with open(path, 'rb') as source:
            text = source.read()
    except (IOError, OSError) as error:
        raise DocumentSyntaxError("Cannot read {}: {}".format(path, error))
    return parse(text)
