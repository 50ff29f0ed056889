"""Tunable limits and defaults.

Settings are built-in defaults, optionally overlaid by a YAML file::

    oracle:
      limit: 256
    count:
      slack_per_search: 8
      slack_constant: 32
    cli:
      recursive_warn_vertices: 100000
    corpus:
      per_family: 1000
      max_n: 64
      max_m: 512
      seed: 2718

Every section and key is optional in the file; unknown ones are an
error.

"""

import collections
import copy
import functools

import logbook
import voluptuous
import yaml

import scckit.errors


log = logbook.Logger(__name__)


DEFAULTS = {
    'oracle': {
        'limit': 256,
    },
    'count': {
        'slack_per_search': 8,
        'slack_constant': 32,
    },
    'cli': {
        'recursive_warn_vertices': 100000,
    },
    'corpus': {
        'per_family': 1000,
        'max_n': 64,
        'max_m': 512,
        'seed': 2718,
    },
}


def _count():
    return voluptuous.All(int, voluptuous.Range(min=0))


SCHEMA = voluptuous.Schema({
    voluptuous.Optional(section): {
        voluptuous.Optional(key): _count() for key in keys
    }
    for section, keys in DEFAULTS.items()
})


Settings = collections.namedtuple('Settings', list(DEFAULTS))


def _freeze(data):
    sections = {}
    for section, values in data.items():
        cls = collections.namedtuple(section.title() + 'Settings',
                                     list(values))
        sections[section] = cls(**values)
    return Settings(**sections)


def load(path=None):
    """Return :class:`Settings` from the defaults and an optional file.

    :param path: YAML file to overlay on the defaults.

    :raises scckit.errors.SettingsError: If the file cannot be read,
       is not YAML or does not match the schema.

    """
    data = copy.deepcopy(DEFAULTS)
    if path is not None:
        try:
            with open(path) as fp:
                raw = yaml.safe_load(fp) or {}
        except OSError as err:
            raise scckit.errors.SettingsError(
                'cannot read {}: {}'.format(path, err)) from err
        except yaml.YAMLError as err:
            raise scckit.errors.SettingsError(
                '{} is not valid YAML: {}'.format(path, err)) from err
        try:
            raw = SCHEMA(raw)
        except voluptuous.Invalid as err:
            raise scckit.errors.SettingsError(
                'invalid settings in {}: {}'.format(path, err)) from err
        for section, values in raw.items():
            data[section].update(values)
        log.debug('Loaded settings from {}', path)
    return _freeze(data)


@functools.lru_cache(maxsize=None)
def default():
    """Return the built-in :class:`Settings`."""
    return load()
