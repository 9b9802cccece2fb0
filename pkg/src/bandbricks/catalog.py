"""Bundled example presentations, loaded by name.

Names: ``gamma``, ``gamma_prime``, ``gamma_double_prime``,
``gamma_double_prime_alt``, ``lambda_2``, ``lambda_3``, ``lambda_4``, ``gp23``, ``a2``.
Presentations shipped without sign lines get solved signs unless ``signs=False``.
"""

from importlib import resources

from .presentation import parse_presentation, solve_signs


def available():
    return sorted(f.name[:-5] for f in resources.files(__package__).joinpath("data").iterdir() if f.name.endswith(".pres"))


def text(name):
    return resources.files(__package__).joinpath("data").joinpath(f"{name}.pres").read_text()


def load(name, signs=True):
    if name not in available():
        raise KeyError(f"no bundled presentation named {name!r}")
    p = parse_presentation(text(name))
    if signs and not p.has_signs:
        p = solve_signs(p)
    return p


def lambda_n(n):
    """The two-arrows-per-step algebra on ``n`` vertices, with its standard signs."""
    lines = ["vertices: " + " ".join(f"v{i}" for i in range(1, n + 1))]
    for k in range(1, n):
        lines += [f"arrow a{k} : v{k + 1} -> v{k}", f"arrow b{k} : v{k + 1} -> v{k}"]
    for k in range(1, n - 1):
        lines += [f"relation a{k}*b{k + 1}", f"relation b{k}*a{k + 1}"]
    for k in range(1, n):
        lines += [f"sign a{k} -1 1", f"sign b{k} 1 -1"]
    return parse_presentation("\n".join(lines))
