"""
This file contains constants that may be used safely throughout the
code.  Although Python does not have any native mechanisms for enforcing
read-only variables, a violation of this convention would be easy enough
to spot.

    # Please do not do this.
    from arfkit.base import constants
    constants.EXIT_OK = 3

When considering whether to put a new variable here or in the settings
module, consider the following factors:

    1. If a user were to change this value while running a batch, would
    it result in unexpected or undefined behavior?

    2. Should changing the value of this variable be subject to a
    version-controlled code change.

    3. Would an advanced user have a use case for changing this variable?

The exit statuses are a good example of a constant: scripts that drive
arfkit depend on them, so they belong here rather than in settings.
"""

# Name of section in the settings file for arfkit.base.settings values.
BASE_SETTINGS_SECTION = "arfkit"

# Name of settings file used by arfkit.base.settings.
SETTINGS_FILE_NAME = "arfkit.ini"

# Environment variables with this prefix override settings, e.g.
# ARFKIT_ENUM_CAP=20 sets settings.ENUM_CAP.
ENV_PREFIX = "ARFKIT_"

# Application name used for the per-user configuration directory.
APP_NAME = "arfkit"

# Exit statuses of the command line tool.  Every code path must end in
# exactly one of these.
EXIT_OK = 0
EXIT_VERDICT_FAILS = 1
EXIT_INPUT_ERROR = 2

# Infinity has no JSON representation, so it travels as this string.
INFINITY_LABEL = "inf"
INFINITY_SYMBOL = u"∞"

# Input document kinds understood by arfkit.documents.
DOCUMENT_KINDS = (
    "quadratic_space",
    "enhanced_space",
    "seifert",
    "surface",
    "lattice",
    "even_presentation",
    "scenario",
    "closed_scenario",
)

# Surface tags used by congruence scenarios.
ORIENTABLE = "orientable"
NONORIENTABLE = "nonorientable"

# Moduli of the congruences.  Arf-type identities live in Z/2, Brown-type
# identities in Z/16 and the collar identity for Brown invariants in Z/8.
ARF_MODULUS = 2
BROWN_MODULUS = 16
COLLAR_MODULUS = 8
