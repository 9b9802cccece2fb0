"""Input checks shared by the estimators and the command line."""

from __future__ import annotations

from pathlib import Path

from . import catalog
from .exceptions import NotAcyclicError, PresentationError
from .presentation import Presentation, ensure_signs, parse_presentation, validate
from .strings import Band, make_band


def load_presentation(source):
    """A path to a ``.pres`` file, a bundled name, or presentation text."""
    if isinstance(source, Presentation):
        return ensure_signs(source)
    src = str(source)
    path = Path(src)
    if "\n" not in src and path.is_file():
        return ensure_signs(parse_presentation(path.read_text()))
    if src in catalog.available():
        return catalog.load(src)
    if "vertices:" in src:
        return ensure_signs(parse_presentation(src))
    raise PresentationError(f"no file or bundled presentation named {src!r}")


def check_presentation(p, string_algebra=True, acyclic=False, gentle=False):
    p = load_presentation(p)
    report = validate(p)
    if string_algebra and not report.is_string_algebra:
        first = report.violations[0]
        raise PresentationError(f"not a string algebra: condition {first[0]}: {first[1]}")
    if acyclic and not report.is_acyclic:
        raise NotAcyclicError(f"quiver has a directed cycle: {' '.join(report.cycle)}")
    if gentle and not report.is_gentle:
        raise PresentationError("not a gentle algebra")
    return p


def check_band(p, b):
    if isinstance(b, Band):
        if b.presentation != p:
            raise PresentationError("band belongs to a different presentation")
        return b
    return make_band(p, b)


def check_bands(X, presentation=None):
    """Bands from ``X``; plain token strings need ``presentation``."""
    X = list(X)
    if not X:
        raise ValueError("no bands given")
    if presentation is None:
        if not all(isinstance(b, Band) for b in X):
            raise ValueError("band text needs a presentation")
        p = X[0].presentation
    else:
        p = load_presentation(presentation)
    return p, [check_band(p, b) for b in X]
