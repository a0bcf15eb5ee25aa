"""Separating-system data model, verifier, text format and bound tables."""

from sepsys.separation.bounds import (
    BoundsRow,
    EndpointAudit,
    arrepol_bounds,
    ceil_div,
    clog2,
    endpoint_audit,
    known_bounds,
)
from sepsys.separation.system import (
    Certificate,
    SeparatingSystem,
    SystemElement,
    VerificationReport,
    is_separating,
    make_certificate,
    signature_strings,
    signatures,
    verify,
)
from sepsys.separation.textio import (
    certificate_from_text,
    certificate_to_text,
    read_certificate,
    write_certificate,
)

__all__ = [
    "BoundsRow",
    "Certificate",
    "EndpointAudit",
    "SeparatingSystem",
    "SystemElement",
    "VerificationReport",
    "arrepol_bounds",
    "ceil_div",
    "certificate_from_text",
    "certificate_to_text",
    "clog2",
    "endpoint_audit",
    "is_separating",
    "known_bounds",
    "make_certificate",
    "read_certificate",
    "signature_strings",
    "signatures",
    "verify",
    "write_certificate",
]
