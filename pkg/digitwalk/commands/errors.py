class CommandError(Exception):
    pass


class CommandNotFound(CommandError):
    def __init__(self, name=None):
        self.name = name


class NotEnoughArguments(CommandError):
    def __init__(self, parameter):
        self.parameter = parameter


class ConverterFailed(CommandError):
    def __init__(self, parameter, value, error):
        self.parameter = parameter
        self.value = value
        self.error = error


class UnknownOption(CommandError):
    def __init__(self, option):
        self.option = option


class TooManyArguments(CommandError):
    def __init__(self, extra):
        self.extra = extra


class ConfigError(CommandError):
    pass


class CheckFailed(CommandError):
    pass


class NotPositive(CheckFailed):
    def __init__(self, name, value, allow_zero=False):
        self.name = name
        self.value = value
        self.allow_zero = allow_zero


class NeedsRational(CheckFailed):
    def __init__(self, command):
        self.command = command


class NeedsNumber(CheckFailed):
    pass
