"""Certifying recognition of adjusted interval digraphs.

A reflexive digraph either has a min ordering or an invertible pair; the
recognizer returns one of the two, each checkable by ``minorder.verify``.
"""
from minorder.digraph import Digraph, parse_digraph, random_reflexive, reference_instance, serialize_digraph
from minorder.implication import InvertiblePairCertificate, VertexPair
from minorder.orientation import MinOrdering, Tournament
from minorder.recognize import RecognitionResult, recognize

__all__ = [
    "Digraph",
    "InvertiblePairCertificate",
    "MinOrdering",
    "RecognitionResult",
    "Tournament",
    "VertexPair",
    "parse_digraph",
    "random_reflexive",
    "recognize",
    "reference_instance",
    "serialize_digraph",
]
