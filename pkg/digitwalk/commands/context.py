from ..engine.digits import EventuallyPeriodicDigits, digits_from_file, expand


class Context:
    def __init__(self, app, config, out, err):
        self.app = app
        self.config = config
        self.out = out
        self.err = err

        self.last_cmd = None  # Filled by cmd.execute

        self._digits_fp = None

    @property
    def f(self):
        return self.app.f

    @property
    def turnmap(self):
        return self.config.turnmap

    def write(self, data):
        if isinstance(data, str):
            data = data.encode("utf-8")

        self.out.write(data)

    def f_send(self, *args, f=None, **kwargs):
        f = f or self.f.DEFAULT
        text = self.f.format(*args, f=f, **kwargs)
        if f.stderr:
            self.err.write(text.encode("utf-8"))

        else:
            self.write(text)

    def send_table(self, fields, rows):
        self.write(self.f.table(fields, rows, self.config.format))

    def expansion(self, number) -> EventuallyPeriodicDigits:
        if isinstance(number, EventuallyPeriodicDigits):
            return number

        return expand(number, self.config.base)

    def digit_source(self, number):
        """Digits of ``number``, or of ``--digits-file`` when one is configured."""
        if self.config.digits_file is None:
            return self.expansion(number)

        self._digits_fp = open(self.config.digits_file, "rb")
        return digits_from_file(self._digits_fp, self.config.base)

    def close(self):
        if self._digits_fp is not None:
            self._digits_fp.close()
            self._digits_fp = None
