from fractions import Fraction
from typing import Dict, List, Optional

from pydantic import BaseModel

from config import Config
from fmzv.algebra.qmatrix import QMatrix
from fmzv.algebra.words import NCPoly, Tensor2


def rational(value: Fraction) -> str:
    return str(value)


class TermModel(BaseModel):
    word: str
    coefficient: str


class TensorTermModel(BaseModel):
    left: str
    right: str
    coefficient: str


class Document(BaseModel):
    schema_version: int = Config.SCHEMA_VERSION
    command: str


class PolyDocument(Document):
    alphabet: str
    terms: List[TermModel]
    text: str

    @classmethod
    def from_poly(cls, command: str, p: NCPoly) -> "PolyDocument":
        return cls(command=command, alphabet=p.alphabet.value, text=str(p), terms=poly_terms(p))


class TensorDocument(Document):
    left_alphabet: str
    right_alphabet: str
    terms: List[TensorTermModel]
    text: str

    @classmethod
    def from_tensor(cls, command: str, t: Tensor2) -> "TensorDocument":
        terms = [
            TensorTermModel(left=t.left_alphabet.format_word(u), right=t.right_alphabet.format_word(v),
                            coefficient=rational(c))
            for (u, v), c in t.items()
        ]
        return cls(command=command, left_alphabet=t.left_alphabet.value, right_alphabet=t.right_alphabet.value,
                   terms=terms, text=str(t))


class MatrixDocument(Document):
    n: int
    level: int
    basis: List[str]
    codomain: List[str]
    rows: List[List[str]]
    det: Optional[str] = None
    two_adic: Optional[bool] = None
    below_diagonal_even: Optional[bool] = None

    @staticmethod
    def matrix_rows(m: QMatrix) -> List[List[str]]:
        return m.to_json_rows()


class DimsRow(BaseModel):
    weight: int
    dim: int
    expected: int


class DimsDocument(Document):
    rows: List[DimsRow]
    matches: bool


class DmDocument(Document):
    weight: int
    dimension: int
    basis: List[List[TermModel]]
    text: List[str]


class KernelDocument(Document):
    weight: int
    dimension: int
    basis: List[str]


class CoefficientDocument(Document):
    a: int
    b: int
    values: Dict[str, str]


class CheckModel(BaseModel):
    name: str
    passed: bool


class VerificationDocument(Document):
    suite: str
    passed: bool
    checks: List[CheckModel]


def poly_terms(p: NCPoly) -> List[TermModel]:
    return [TermModel(word=p.alphabet.format_word(w), coefficient=rational(c)) for w, c in p.items()]
