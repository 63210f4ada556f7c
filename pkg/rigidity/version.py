"""
Version information for the rigidity project.

Format: VERSION_BRANCH_BUILD-YYYYMMDD-COMMITHASH

Example: 0.1.0_main_1-20261019-00000000
"""

MAJOR = 0
MINOR = 1
PATCH = 0

# Release phase (alpha, beta, rc1, ...); None for stable releases
PHASE = None

# Full version string, bumped at release time
__version__ = "0.1.0_main_1-20261019-00000000"


def get_version():
    """Return the full version string including branch and build info."""
    return __version__


def get_base_version():
    """Return MAJOR.MINOR.PATCH with the optional phase."""
    if "_" in __version__:
        base = __version__.split("_")[0]
    else:
        base = f"{MAJOR}.{MINOR}.{PATCH}"
    if PHASE:
        base = f"{base}-{PHASE}"
    return base


def get_pip_version():
    """
    PEP 440 version for setuptools: main builds map to the base version,
    other branches to BASE.devBUILD.
    """
    if "_" not in __version__:
        return get_base_version()
    parts = __version__.split("_")
    if parts[1] == "main":
        return parts[0]
    build_info = "_".join(parts[2:])
    build_num = build_info.split("-")[0] if "-" in build_info else "0"
    return f"{parts[0]}.dev{build_num}"


VERSION = get_version()
BASE_VERSION = get_base_version()
PIP_VERSION = get_pip_version()
