"""
Output mapping, formatting and broadcast of log messages.

Modules log through the global 'out' object:

    from arfkit.base.output import out
    out.verbose("Radical has dimension {}".format(k))

Every message becomes a "log structure" (a dict) that is broadcast on the
'logs' smokesignal channel.  Console printing goes to stderr and is off
unless enabled, so that reports written to stdout stay byte-identical
between runs.
"""

import sys
import time
import traceback

from enum import Enum

import colorama
import smokesignal

from . import settings


# colorama package does colors but doesn't do style, so keeping this for now
BOLD = '\033[1m'
LOG_SIGNAL = 'logs'

Level = Enum('Level', 'HEADER, VERBOSE, INFO, WARN, ERR')

# Represents formatting information for the specified log type
LOG_TYPES = {
    Level.HEADER: {'name': Level.HEADER.name, 'glyph': '==', 'color': colorama.Fore.BLUE},
    Level.VERBOSE: {'name': Level.VERBOSE.name, 'glyph': '>>', 'color': colorama.Fore.WHITE},
    Level.INFO: {'name': Level.INFO.name, 'glyph': '--', 'color': colorama.Fore.GREEN},
    Level.WARN: {'name': Level.WARN.name, 'glyph': '**', 'color': colorama.Fore.YELLOW},
    Level.ERR: {'name': Level.ERR.name, 'glyph': '!!', 'color': colorama.Fore.RED},
}

###############################################################################
# Logging Utilities
###############################################################################


def silentLogPrefix(stepsUp):
    '''
    Gets caller information silently (without caller intervention).
    The single parameter reflects how far up the stack to go to find the caller and
    depends how deep the direct caller to this method is wrt to the target caller

    :param stepsUp: the number of steps to move up the stack for the caller
    :type steps: int.
    '''
    try:
        frame = sys._getframe(stepsUp)
        module, package = parseLogPrefix(frame.f_code.co_filename)
        line = frame.f_lineno
    except (ValueError, IndexError):
        return 'unknown', 'unknown', '??'

    return package, module, line


def parseLogPrefix(path):
    '''
    Takes a source file path and returns the module and package names.
    '''
    parts = path.replace('\\', '/').split('/')
    module = parts[-1].replace('.py', '')
    package = parts[-2] if len(parts) > 1 else 'unknown'

    return module, package


###############################################################################
# Output Classes
###############################################################################

class BaseOutput(object):

    '''
    Base output type class.

    This class and its subclasses are registered with an attribute on the global
    'out' object and are responsible for turning the arguments into a "log
    structure" (which is a dict.)

    Objects are required to output a dict that mininmally contains the keys message and type.
    '''

    def __init__(self, logType):
        '''
        Initialize this output type.

        :param logType: how this output type is displayed
        :type logType: dictionary object containing name, glyph, and color keys
        '''
        self.type = logType

    def __call__(self, args, **extra):
        '''
        Called as an attribute on out. This method takes the passed params and builds a log dict,
        returning it.
        '''
        package, module, line = silentLogPrefix(3)

        message = str(args)
        if message.endswith('\n'):
            message = message.strip()

        return {
            'message': message,
            'type': self.type['name'],
            'extra': extra,
            'package': package,
            'module': module,
            'timestamp': time.time(),
            'line': line
        }

    def formatOutput(self, logDict):
        '''
        Convert a logdict into a custom formatted, human readable version suitable for
        printing to console.
        '''
        trace = '[%s.%s#%s @ %s] ' % (
            logDict['package'],
            logDict['module'],
            logDict['line'],
            time.strftime('%H:%M:%S', time.localtime(logDict['timestamp']))
        )
        return self.type['color'] + 'ARFKIT ' + self.type['glyph'] + ' ' \
            + trace + logDict['message'] + colorama.Style.RESET_ALL


class ExceptionOutput(BaseOutput):

    '''
    Handle vanilla exceptions passed directly to us using out.exception
    '''

    def __call__(self, exception):
        ex_type, ex, tb = sys.exc_info()
        package, module, line = silentLogPrefix(3)

        message = type(exception).__name__ + ': ' + str(exception)

        if tb is not None:
            trace = traceback.extract_tb(tb)
            lastFrame = trace[-1]
            module, package = parseLogPrefix(lastFrame[0])
            line = lastFrame[1]
            for x in trace:
                message += '\n  File "%s", line %d, in %s\n\t%s' % (x[0], x[1], x[2], x[3])

        return {
            'message': message,
            'type': self.type['name'],
            'extra': {'exception': type(exception).__name__},
            'package': package,
            'module': module,
            'timestamp': time.time(),
            'line': line
        }


class Output(object):

    '''
    Class that holds the output streams.

    The way this Output class is setup is that you pass it a series
    of kwargs like (stuff=OutputClass()). Then at any point in your
    program you can call "out.stuff('This is a string')".

    This way we can easily support different levels of verbosity without
    the need to use some kind of bitmask or anything else.  Unknown
    stream names resolve to a no-op so a typo never crashes a computation.
    '''

    def __init__(self, **kwargs):
        """Setup the initial set of output stream functions."""
        self.__dict__['outputMappings'] = {}
        self.__dict__['stream'] = None

        for name, func in kwargs.items():
            setattr(self, name, func)

    def __getattr__(self, name):
        """Catch attribute access attempts that were not defined in __init__
            by default throw them out."""
        return lambda *args, **kwargs: None

    def __setattr__(self, name, val):
        def inner(*args, **kwargs):
            result = val(*args, **kwargs)
            self.handlePrint(result)
            return result

        # can't call setattr here (which normally looks like self.name = inner)
        self.__dict__[name] = inner

        # Save the original function (unwrapped) under the tag its registered with
        # so we can later query the objects by this tag and ask them to print
        self.__dict__['outputMappings'][name] = val

    def startLogging(self, printToConsole=None, stream=None):
        '''
        Begin console logging.  The output class is ready to go out of the box
        but stays silent until asked, so that mere imports never write to
        the console.

        :param printToConsole: print formatted messages; defaults to
            settings.LOG_TO_CONSOLE
        :type printToConsole: bool.
        :param stream: file-like object to print to, stderr by default
        '''
        if printToConsole is None:
            printToConsole = settings.LOG_TO_CONSOLE

        if printToConsole:
            colorama.init()

        self.__dict__['stream'] = stream
        settings.LOG_TO_CONSOLE = printToConsole

    def handlePrint(self, logDict):
        '''
        All printing objects return their messages. These messages are routed
        to this method for handling.

        Optionally display the messages, then broadcast them.

        :param logDict: a dictionary representing this log item. Must contain keys
        message and type.
        :type logDict: dict.
        '''

        # If the logger returns None, assume we dont want the output
        if logDict is None:
            return

        if settings.LOG_TO_CONSOLE:
            stream = self.stream if self.stream is not None else sys.stderr
            stream.write(self.messageToString(logDict) + '\n')

        # Broadcast the log to interested parties
        smokesignal.emit(LOG_SIGNAL, logDict)

    def messageToString(self, message):
        '''
        Converts message dicts to a format suitable for printing based on
        the conversion rules laid out in in that class's implementation.

        :param message: the dict to convert to string
        :type message: dict.
        :returns: str
        '''
        level = Level[message['type']]
        outputObject = self.outputMappings.get(level.name.lower(),
                                               BaseOutput(LOG_TYPES[level]))
        return outputObject.formatOutput(message)


out = Output(
    header=BaseOutput(LOG_TYPES[Level.HEADER]),
    verbose=BaseOutput(LOG_TYPES[Level.VERBOSE]),
    info=BaseOutput(LOG_TYPES[Level.INFO]),
    warn=BaseOutput(LOG_TYPES[Level.WARN]),
    err=BaseOutput(LOG_TYPES[Level.ERR]),
    exception=ExceptionOutput(LOG_TYPES[Level.ERR])
)
