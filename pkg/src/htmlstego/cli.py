"""Command-line front-end.

    htmlstego embed    --cover PAGE [--msg PATH | --msg-hex HEX] [--key K] [--out PATH]
    htmlstego extract  --stego PAGE [--key K] [--out PATH] [--format raw|hex]
    htmlstego capacity --cover PAGE
    htmlstego analyze  --cover PAGE --stego PAGE [--out PATH]

``-`` stands for standard input or output.  Without ``--msg``/``--msg-hex``
the message is read from standard input.  Files are read and written as raw
bytes.  The key is taken as the raw bytes of the argument.

Exit status: 0 ok, 2 capacity error, 3 frame/extraction error, 4 I/O or usage.
"""

import argparse
import binascii
import os
import sys

from .analysis import compare, format_report
from .engine import StegoOptions, capacity, embed, extract
from .errors import CapacityExceeded, FrameError, PayloadTooLarge

EXIT_OK = 0
EXIT_CAPACITY = 2
EXIT_FRAME = 3
EXIT_USAGE = 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser():
    p = _Parser(prog="htmlstego", description="Hide data in the letter case of HTML tags.")
    p.add_argument("command", choices=["embed", "extract", "capacity", "analyze"])
    p.add_argument("--cover", metavar="PATH")
    p.add_argument("--stego", metavar="PATH")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--msg", metavar="PATH")
    src.add_argument("--msg-hex", metavar="HEX")
    p.add_argument("--key", metavar="STRING")
    p.add_argument("--out", metavar="PATH", default="-")
    p.add_argument("--format", choices=["raw", "hex"], default="raw")
    return p


def _require(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"{args.command} requires --{name}")


def _inputs(args):
    roles = {"cover": args.cover, "stego": args.stego}
    if args.command == "embed":
        roles["msg"] = "-" if args.msg is None and args.msg_hex is None else args.msg
    if sum(1 for v in roles.values() if v == "-") > 1:
        raise UsageError("standard input can feed only one of " + ", ".join(roles))


def _read(path, stdin):
    if path == "-":
        return stdin.read()
    with open(path, "rb") as f:
        return f.read()


def _write(path, data, stdout):
    if path == "-":
        stdout.write(data)
        stdout.flush()
    else:
        with open(path, "wb") as f:
            f.write(data)


def _run(args, stdin, stdout):
    _inputs(args)
    options = StegoOptions(key=os.fsencode(args.key) if args.key is not None else None)

    if args.command == "embed":
        _require(args, "cover")
        cover = _read(args.cover, stdin)
        if args.msg_hex is not None:
            try:
                message = binascii.unhexlify(args.msg_hex)
            except (binascii.Error, ValueError) as e:
                raise UsageError(f"--msg-hex is not valid hex: {e}") from None
        else:
            message = _read(args.msg if args.msg is not None else "-", stdin)
        _write(args.out, embed(cover, message, options), stdout)

    elif args.command == "extract":
        _require(args, "stego")
        message = extract(_read(args.stego, stdin), options)
        if args.format == "hex":
            message = message.hex().encode("ascii") + b"\n"
        _write(args.out, message, stdout)

    elif args.command == "capacity":
        _require(args, "cover")
        report = capacity(_read(args.cover, stdin))
        lines = [
            f"total_candidates={report.total_candidates}",
            f"header_bits={report.header_bits}",
            f"payload_capacity_bits={report.payload_capacity_bits}",
            f"payload_capacity_bytes={report.payload_capacity_bytes}",
        ]
        _write(args.out, ("\n".join(lines) + "\n").encode("ascii"), stdout)

    else:
        _require(args, "cover", "stego")
        report = compare(_read(args.cover, stdin), _read(args.stego, stdin))
        _write(args.out, format_report(report).encode("ascii"), stdout)


def main(argv=None, stdin=None, stdout=None, stderr=None):
    stdin = stdin if stdin is not None else sys.stdin.buffer
    stdout = stdout if stdout is not None else sys.stdout.buffer
    stderr = stderr if stderr is not None else sys.stderr

    try:
        args = build_parser().parse_args(argv)
        _run(args, stdin, stdout)
    except (CapacityExceeded, PayloadTooLarge) as e:
        print(f"htmlstego: capacity error: {e}", file=stderr)
        return EXIT_CAPACITY
    except FrameError as e:
        print(f"htmlstego: cannot extract: {e}", file=stderr)
        return EXIT_FRAME
    except UsageError as e:
        print(f"htmlstego: usage error: {e}", file=stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"htmlstego: I/O error: {e}", file=stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
