from typing import Any, Dict, Optional, Tuple


class PgmError(Exception):
    """Root of every error raised by the verifier."""


class GroupError(PgmError, ValueError):
    pass


class UnknownSpec(GroupError):
    pass


class OrderOverflow(GroupError):
    pass


class MalformedTable(GroupError):
    pass


class NotLatinSquare(GroupError):
    pass


class NoIdentity(GroupError):
    pass


class NotAssociative(GroupError):
    def __init__(self, message: str, triple: Optional[Tuple[int, int, int]] = None):
        super().__init__(message)
        self.triple = triple


class DegreeTooLarge(GroupError):
    pass


class NotASubgroup(GroupError):
    pass


class InvalidChain(GroupError):
    pass


class GroupFormatError(GroupError):
    pass


class SignatureError(PgmError, ValueError):
    pass


class ChainTooShort(SignatureError):
    pass


class OutOfRange(SignatureError):
    pass


class NotInjectiveBlock(SignatureError):
    pass


class NotExactCover(SignatureError):
    def __init__(self, message: str, witness: Optional[int] = None):
        super().__init__(message)
        self.witness = witness


class NotPrime(SignatureError):
    pass


class SignatureFormatError(SignatureError):
    pass


class KeyFormatError(SignatureError):
    pass


class TransformError(PgmError, ValueError):
    pass


class NotAPermutation(TransformError):
    pass


class DegreeMismatch(TransformError):
    pass


class NotInSubgroup(TransformError):
    pass


class BadBlockIndex(TransformError):
    pass


class BadShape(TransformError):
    pass


class PermutationFormatError(TransformError):
    pass


class PermGroupError(PgmError, ValueError):
    pass


class NotTransitive(PermGroupError):
    pass


class WitnessError(PgmError, ValueError):
    pass


class MissingSecondarySubgroup(WitnessError):
    pass


class DegenerateInput(WitnessError):
    pass


class EvenDegree(WitnessError):
    pass


class OddDegree(WitnessError):
    pass


class BadBlockCoordinates(WitnessError):
    pass


class ProofError(WitnessError):
    """A construction failed its own endpoint check."""


class VerificationMismatch(PgmError):
    def __init__(self, message: str, expected: Dict[str, Any], computed: Dict[str, Any]):
        super().__init__(message)
        self.expected = expected
        self.computed = computed

    def diff(self) -> str:
        lines = []
        for key in sorted(set(self.expected) | set(self.computed)):
            want = self.expected.get(key)
            got = self.computed.get(key)
            marker = " " if want == got else "!"
            lines.append(f"{marker} {key}: expected={want} computed={got}")
        return "\n".join(lines)
