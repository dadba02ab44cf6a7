"""Exceptions raised by the toolkit."""


class WatsetError(Exception):
    """Base class for all toolkit errors."""


class EmptyInput(WatsetError, ValueError):
    pass


class MissingEmbeddings(WatsetError, ValueError):
    pass


class UnknownWord(WatsetError, KeyError):
    def __str__(self):
        # KeyError.__str__ repr()s its argument, which garbles CLI messages
        return str(self.args[0]) if self.args else ""


class FormatError(WatsetError, ValueError):
    pass


class InconsistentInventory(WatsetError, ValueError):
    pass


class EmptyGold(WatsetError, ValueError):
    pass
