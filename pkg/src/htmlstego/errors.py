class StegoError(Exception):
    """Base class for everything this package raises on bad input."""


class CapacityExceeded(StegoError):
    """The cover has too few candidate letters for the bits to embed."""

    def __init__(self, needed_bits, available_bits):
        self.needed_bits = needed_bits
        self.available_bits = available_bits
        super().__init__(
            f"need {needed_bits} bits but cover offers only {available_bits} candidate letters"
        )


class PayloadTooLarge(StegoError, ValueError):
    """Payload bit count does not fit the 32-bit length header."""


class FrameError(StegoError):
    """A frame could not be read back."""


class TruncatedFrame(FrameError):
    pass


class NotByteAligned(FrameError, ValueError):
    pass
