import json
import os

from .errors import ConfigError

BASE_DIR = os.path.abspath(os.path.dirname(__file__))


class Option:
    def __init__(self, default=None, cast=None, inherit=True):
        self.name = None
        self.default = default
        self.cast = cast
        self.inherit = inherit

    def __get__(self, instance, owner=None):
        if not instance:
            return self
        if self.name not in instance.__dict__:
            parent = instance.__dict__["parent"]
            if parent and self.inherit:
                return getattr(parent, self.name)
            return self.get_default()
        return instance.__dict__[self.name]

    def __set__(self, instance, value):
        if value is None:
            instance.__dict__.pop(self.name, None)
            return
        if self.cast:
            try:
                value = self.cast(value)
            except (TypeError, ValueError):
                raise ConfigError("{} must be {} (got {!r})".format(self.name, self.cast.__name__, value))
        instance.__dict__[self.name] = value

    def __set_name__(self, owner, name):
        self.name = name

    def get_default(self):
        return self.default() if callable(self.default) else self.default


def positive_int(value):
    if isinstance(value, bool):
        raise TypeError(value)
    value = int(value)
    if value < 1:
        raise ValueError(value)
    return value


class Settings:
    factor_bound = Option(default=10**12, cast=positive_int)
    enum_bound = Option(default=10**6, cast=positive_int)
    chain_length = Option(default=4, cast=positive_int)

    def __init__(self, config_path=None, **overrides):
        self.parent = None
        self.name = None
        if config_path:
            self.load(config_path)
        for key, value in overrides.items():
            if not isinstance(getattr(Settings, key, None), Option):
                raise ConfigError("unknown setting: {}".format(key))
            setattr(self, key, value)

    def __repr__(self):
        return "Settings({})".format(", ".join("{}={}".format(k, v) for k, v in self.items()))

    @classmethod
    def options(cls):
        return [name for name, value in vars(cls).items() if isinstance(value, Option)]

    def items(self):
        return [(name, getattr(self, name)) for name in self.options()]

    def inherit(self, parent):
        self.parent = parent
        return self

    def copy(self, **overrides):
        return Settings(**overrides).inherit(self)

    def load(self, config_path):
        try:
            with open(config_path, "r") as config_file:
                config = json.load(config_file)
        except (OSError, ValueError) as e:
            raise ConfigError("could not load settings from {}: {}".format(config_path, e))
        if not isinstance(config, dict) or not isinstance(config.get("settings", {}), dict):
            raise ConfigError("{}: expected an object with a 'settings' object".format(config_path))
        self.name = config.get("name", os.path.basename(config_path))
        for key, value in config.get("settings", {}).items():
            if key not in self.options():
                raise ConfigError("{}: unknown setting {}".format(config_path, key))
            setattr(self, key, value)


DEFAULT = Settings(os.path.join(BASE_DIR, "config/default.json"))


def resolve(settings):
    return DEFAULT if settings is None else settings
