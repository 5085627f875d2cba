"""
    This file contains any settings required by ANY and ALL modules of arfkit.
    They are defaulted to some particular value and can be read by any module
    with the following code:

        from arfkit.base import settings
        print(settings.ENUM_CAP)

    Read settings at call time (settings.ENUM_CAP), never copy them into a
    module-level name at import time, or overrides will not be seen.

    These settings can be overriden by a KEY:VALUE array, by an arfkit.ini
    file and by ARFKIT_* environment variables.  This is done by calling the
    following function from initialization code (the CLI does it):

        settings.loadSettings(settings_array)
"""

import configparser
import os
import sys
import types

import appdirs

from . import constants


DEBUG_MODE = False

#
# Exhaustive enumeration over F2^n (democratic Arf, compass and Gauss-sum
# Brown invariants) is refused above this dimension.  2^24 evaluations is
# still desk-scale.
#
ENUM_CAP = 24

#
# Largest matrix side accepted by the F2 and integer form constructors.
#
MAX_DIMENSION = 4096

#
# Rows per block when enumerating F2^n in vectorized chunks.
#
ENUM_BLOCK_BITS = 16

#
# Logging.  Console output goes to stderr so reports stay deterministic.
#
LOG_TO_CONSOLE = False

#
# Reports
#
JSON_INDENT = 2


#
# Settings that must keep their type when overridden.
#
_INTEGER_SETTINGS = ("ENUM_CAP", "ENUM_BLOCK_BITS", "MAX_DIMENSION", "JSON_INDENT")
_BOOLEAN_SETTINGS = ("DEBUG_MODE", "LOG_TO_CONSOLE")


###############################################################################
# Helper functions
###############################################################################


def iterate_module_attributes(module):
    """
    Iterate over the attributes in a module.

    This is a generator function.

    Returns (name, value) tuples.
    """
    for name in dir(module):
        # Ignore fields marked as private or builtin.
        if name.startswith('_'):
            continue

        value = getattr(module, name)

        # Ignore callable objects (functions) and loaded modules.
        if callable(value) or isinstance(value, types.ModuleType):
            continue

        yield (name, value)


def assign(name, value, source):
    """
    Set one setting, checking that typed settings keep their type.

    Raises ValueError naming the source of a bad value; nothing is
    assigned in that case.
    """
    if name in _INTEGER_SETTINGS:
        if isinstance(value, bool) or not isinstance(value, int) or value < 0:
            raise ValueError("{} from {} must be a nonnegative integer, got {!r}".format(
                name, source, value))
    elif name in _BOOLEAN_SETTINGS:
        if not isinstance(value, bool):
            raise ValueError("{} from {} must be true or false, got {!r}".format(
                name, source, value))
    setattr(sys.modules[__name__], name, value)


def load_from_file(path):
    """
    Load settings from an INI file.

    This will check the configuration file for a lowercase version of all of
    the settings in this module. It will look in a section called "arfkit".

    The example below will set ENUM_CAP.

        [arfkit]
        enum_cap = 20
    """
    config = configparser.ConfigParser()
    config.read(path)

    mod = sys.modules[__name__]
    for name, _ in iterate_module_attributes(mod):
        # Check if lowercase version exists in the file and load the
        # appropriately-typed value.
        key = name.lower()
        if config.has_option(constants.BASE_SETTINGS_SECTION, key):
            value = config.get(constants.BASE_SETTINGS_SECTION, key)
            assign(name, parseValue(value), path)


def parseValue(key):
    """
    Attempts to parse the key value, so if the string is 'False' it will parse a boolean false.

    :param key: the key to parse
    :type key: string

    :returns: the parsed key.
    """
    # Is it a boolean?
    if key in ('True', 'true'):
        return True
    if key in ('False', 'false'):
        return False

    # Is it None?
    if key in ('None', 'none'):
        return None

    # Is it a float?
    if '.' in key:
        try:
            return float(key)
        except ValueError:
            pass

    # Is it an int?
    try:
        return int(key)
    except ValueError:
        pass

    # Otherwise, its just a string:
    return key


def settingsFileDirs():
    """
    Directories searched for an arfkit.ini file, lowest precedence first.
    """
    return [
        appdirs.user_config_dir(constants.APP_NAME),
        "."
    ]


def loadSettings(slist=[]):
    """
    Take a list of key:value pairs, and replace any setting defined.
    Also search through the settings module and see if any matching
    environment variables exist to replace as well.

    :param slist: the list of key:val settings
    :type slist: array.

    :returns: None
    """

    # Get a handle to our settings defined above
    mod = sys.modules[__name__]

    # First overwrite settings they may have provided with the arg list
    for kv in slist:
        if ':' not in kv:
            raise ValueError("Setting {} is not of the form KEY:VALUE".format(kv))
        k, v = kv.split(':', 1)
        # We can either replace an existing setting, or set a new value, we don't care
        assign(k.strip().upper(), parseValue(v.strip()), "--setting")

    # Next check for settings from file(s) which may be located in a few
    # different directories.
    for d in settingsFileDirs():
        path = os.path.join(d, constants.SETTINGS_FILE_NAME)
        load_from_file(path)

    # Now search through our settings and look for environment variable matches
    # they defined. Environment variables override all other sources.
    for name, _ in iterate_module_attributes(mod):
        value = os.environ.get(constants.ENV_PREFIX + name, None)
        if value is not None:
            assign(name, parseValue(value), constants.ENV_PREFIX + name)
