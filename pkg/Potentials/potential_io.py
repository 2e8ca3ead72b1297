__all__ = ["potentialFromDict", "loadPotential"]

__author__ = "Lekan Molux"
__date__ = "Oct. 06, 2026"

import json
import logging

from HillBandPy.Utilities import *
from .from_harmonics import fromHarmonics
from .delta_comb import deltaComb
from .random_potential import randomPotential
from .piecewise_potential import piecewiseConstantPotential
from .build_primitive import buildPrimitive

logger = logging.getLogger(__name__)


def _field(doc, name, kind, default=None):
    if name not in doc:
        if default is not None:
            return default
        error(f'potential document misses the field "{name}"', FormatError)
    try:
        return kind(doc[name])
    except (TypeError, ValueError):
        error(f'field "{name}" must be of type {kind.__name__}, got {doc[name]!r}', FormatError)


def potentialFromDict(doc, seed=None):
    """
     pot = potentialFromDict(doc, seed)

     Builds the potential described by a parsed JSON document:

       {"type": "fourier", "mean": c, "harmonics": [{"m": 1, "re": 1.0, "im": 0.0}, ...]}
       {"type": "delta_comb", "alpha": 1.0, "truncation": 16}
       {"type": "random", "seed": 7, "K": 32, "amplitude": 5.0, "decay": 0.6}
       {"type": "piecewise", "breakpoints": [...], "levels": [...],
        "masses": [...], "truncation": 16}

     Inp.ts:
       doc  - the document (a dict)
       seed - optional override of the seed of a random document

     Output:
       pot - Bundle with fields
               .type:      the document type
               .potential: FourierPotential (truncated table for the comb
                           and the piecewise kinds)
               .profile:   PrimitiveProfile driving the integrator; exact
                           sawtooth/piecewise primitives where available
    """
    if not isinstance(doc, dict):
        error('potential document must be a JSON object', FormatError)
    kind = doc.get('type')

    if kind == 'fourier':
        entries = []
        for h in doc.get('harmonics', []):
            if not isinstance(h, dict):
                error(f'harmonic entries must be objects, got {h!r}', FormatError)
            entries.append((_field(h, 'm', int),
                            complex(_field(h, 're', float, 0.0), _field(h, 'im', float, 0.0))))
        potential = fromHarmonics(entries, _field(doc, 'mean', float, 0.0))
        profile = buildPrimitive(potential)
    elif kind == 'delta_comb':
        potential, profile = deltaComb(_field(doc, 'alpha', float),
                                       _field(doc, 'truncation', int, 16))
    elif kind == 'random':
        s = _field(doc, 'seed', int) if seed is None else int(seed)
        potential = randomPotential(s, _field(doc, 'K', int),
                                    _field(doc, 'amplitude', float, 5.0),
                                    _field(doc, 'decay', float, 0.6))
        potential = potential.shifted(_field(doc, 'mean', float, 0.0))
        profile = buildPrimitive(potential)
    elif kind == 'piecewise':
        potential, profile = piecewiseConstantPotential(
                                doc.get('breakpoints'), doc.get('levels'),
                                doc.get('masses'), _field(doc, 'truncation', int, 16))
    else:
        error(f'unknown potential type {kind!r}; expected fourier, '
              'delta_comb, random or piecewise', FormatError)

    logger.debug(f'loaded {kind} potential: {potential!r}, {profile!r}')
    return Bundle(dict(type=kind, potential=potential, profile=profile))


def loadPotential(path, seed=None):
    "Reads a potential JSON file; see potentialFromDict for the format."
    with open(path, 'r') as fp:
        try:
            doc = json.load(fp)
        except json.JSONDecodeError as exc:
            error(f'{path} is not valid JSON: {exc}', FormatError)
    return potentialFromDict(doc, seed)
