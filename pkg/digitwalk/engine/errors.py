class DigitWalkException(Exception):
    pass


class DomainError(DigitWalkException):
    pass


class RationalOutOfRange(DomainError):
    def __init__(self, value):
        self.value = value
        super().__init__("%s is not in [0, 1)" % value)


class InvalidDigits(DomainError):
    pass


class DigitOutOfRange(DomainError):
    def __init__(self, digit, base):
        self.digit = digit
        self.base = base
        super().__init__("digit %r is out of range for base %d" % (digit, base))


class DigitSourceExhausted(DomainError):
    def __init__(self, needed, got):
        self.needed = needed
        self.got = got
        super().__init__("digit source ran out after %d of %d digits" % (got, needed))


class StepIndexOutOfRange(DomainError):
    def __init__(self, index, last):
        self.index = index
        self.last = last
        super().__init__("step %d is outside the path (last step is %d)" % (index, last))


class InvalidTurnMap(DomainError):
    pass


class NonPositiveRadius(DomainError):
    def __init__(self, radius):
        self.radius = radius
        super().__init__("radius must be positive, got %s" % radius)


class SurgeryError(DigitWalkException):
    pass


class InvalidPosition(SurgeryError):
    def __init__(self, position):
        self.position = position
        super().__init__("digit positions start at 1, got %d" % position)


class RunNotFound(SurgeryError):
    """Raised when a removal window does not consist of one repeated digit.

    Attributes
    ------------
    position: :class:`int`
        1-based index of the first digit of the window.
    window: :class:`tuple`
        The digits found at the requested window.
    """

    def __init__(self, position, window):
        self.position = position
        self.window = window
        text = "".join(str(d) for d in window)
        super().__init__("digits %d..%d are %r, not a closing run" % (position, position + len(window) - 1, text))


class NonClosingDigit(SurgeryError):
    def __init__(self, digit):
        self.digit = digit
        super().__init__("a run of digit %d never closes a loop" % digit)


class WitnessMismatch(SurgeryError):
    pass


class ClosureMismatch(DigitWalkException):
    """The simulated cycle did not return to its start state.

    This indicates a bug in the period analysis, never bad input.
    """
    pass
