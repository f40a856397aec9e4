import argparse
import logging
import sys

import yaml


class FinpartError(Exception):
    """Base class of all errors raised by finpart."""


class MultisetError(FinpartError, ValueError):
    pass


class ForestParseError(FinpartError, ValueError):
    def __init__(self, message, offset):
        super().__init__('{} at offset {}'.format(message, offset))
        self.offset = offset


class BudgetExceededError(FinpartError):
    pass


class InexactDivisionError(FinpartError, ArithmeticError):
    pass


class _HashFormatter(logging.Formatter):
    # ERROR lines as 'ERROR: ...', everything else as '# ...'
    def format(self, record):
        message = record.getMessage()
        if record.levelno >= logging.ERROR:
            return 'ERROR: {}'.format(message)
        if record.levelno == logging.WARNING:
            return '# WARNING: {}'.format(message)
        return '# {}'.format(message)


def setup_logging(level=logging.WARNING, stream=None):
    """Route the finpart loggers to a single stream (stderr by default)."""
    logger = logging.getLogger('finpart')
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
    handler = logging.StreamHandler(stream if stream is not None else sys.stderr)
    handler.setFormatter(_HashFormatter())
    logger.addHandler(handler)
    logger.setLevel(level)
    logger.propagate = False
    return logger


def log_level(verbose=False, quiet=False, default=logging.WARNING):
    if quiet:
        return logging.ERROR
    if verbose:
        return logging.DEBUG
    return default


def print_header(title, log):
    width = len(title) + 12
    log.info('#' * width)
    log.info('###' + ' ' * (width - 6) + '###')
    log.info('###   {}   ###'.format(title))
    log.info('###' + ' ' * (width - 6) + '###')
    log.info('#' * width)


def load_parameters(path):
    """
    Read a multi-document YAML parameters file.

    Parameters
    ----------
    path : STR
        Path to the parameters file. Every document needs a 'type' key.

    Returns
    -------
    params : DICT
        {<type>: {<key>: <value>}}, later documents of the same type
        update earlier ones.

    """
    params = {}
    with open(path, 'r') as param_handle:
        for entry in yaml.load_all(param_handle, Loader=yaml.SafeLoader):
            if entry is None:
                continue
            if not isinstance(entry, dict) or 'type' not in entry:
                raise FinpartError(
                    'Every document in {} needs a "type" key'.format(path)
                )
            entry = dict(entry)
            in_type = entry.pop('type')
            params.setdefault(in_type, {}).update(entry)
    return params


# argparse type converters, errors surface as usage errors (exit status 2)
def non_negative_int(value):
    try:
        number = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError('Integer expected, got "{}"'.format(value))
    if number < 0:
        raise argparse.ArgumentTypeError('Non-negative integer expected, got {}'.format(number))
    return number


def positive_int(value):
    number = non_negative_int(value)
    if number == 0:
        raise argparse.ArgumentTypeError('Positive integer expected, got 0')
    return number
