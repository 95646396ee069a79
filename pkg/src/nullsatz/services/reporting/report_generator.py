"""
Report generation for every procedure result.

Reports are plain dictionaries; ``render_json`` gives the canonical document
(sorted keys, fixed polynomial term order) and ``render_text`` a readable
summary.
"""

import json
import logging
from typing import Any, Dict, List, Optional

from ..certificates import (
    CertificateDocument,
    Empty,
    HilbertFunctionTable,
    Member,
    NoProjectiveZeros,
    Yes,
)
from ..certificates.certificate import Certificate
from ..elimination import BackSubstitutionResult, HentzeltChain, ResolventChain
from ..uresolvent import UResolvent


class ReportGenerator:
    """Build and render result documents."""

    def __init__(self):
        self.logger = logging.getLogger("ReportGenerator")

    # -- builders --------------------------------------------------------

    @staticmethod
    def certificate(cert: Certificate) -> Dict[str, Any]:
        return CertificateDocument.from_certificate(cert).model_dump(mode="json")

    def resolvent_report(self, chain: ResolventChain) -> Dict[str, Any]:
        cofactors = chain.original_cofactors()
        return {
            "command": "resolvent",
            "variables": list(chain.ideal.ctx.names),
            "generators": [g.render() for g in chain.ideal.gens],
            "complete_resolvent": chain.original_resolvent().render(),
            "unit": chain.is_unit,
            "cofactors": [a.render() for a in cofactors] if cofactors is not None else None,
            "chain": chain.to_dict(),
        }

    def hentzelt_report(self, chain: HentzeltChain) -> Dict[str, Any]:
        return {
            "command": "hentzelt",
            "variables": list(chain.ideal.ctx.names),
            "terminal": chain.terminal.kind,
            "terminal_stage": chain.terminal.stage,
            "minor_ideals": [[p.render() for p in ideal] for ideal in chain.minor_ideals()],
            "chain": chain.to_dict(),
        }

    def solve_report(self, method: str, points: List[dict], *, ur: Optional[UResolvent] = None,
                     backsub: Optional[BackSubstitutionResult] = None,
                     log: Optional[List[dict]] = None) -> Dict[str, Any]:
        report: Dict[str, Any] = {"command": "solve", "method": method, "points": points}
        if ur is not None:
            report.update({
                "Fu": ur.Fu.render(),
                "residual": ur.residual.render(),
                "u1_power": ur.u1_power,
                "true_linear_factors": [f.to_dict() for f in ur.true_linear_factors],
                "positive_dimensional": ur.positive_dimensional,
                "verification_log": log or [],
            })
        if backsub is not None:
            report.update({
                "irrational": list(backsub.irrational),
                "positive_dimensional": backsub.positive_dimensional,
            })
        return report

    def wnss_report(self, result) -> Dict[str, Any]:
        if isinstance(result, Empty):
            return {"command": "wnss", "answer": "Empty", "certificate": self.certificate(result.certificate)}
        return {"command": "wnss", "answer": "HasZeros", "resolvent": result.resolvent.render()}

    def radical_report(self, result) -> Dict[str, Any]:
        if isinstance(result, Yes):
            return {"command": "radical", "answer": "Yes", "rho": result.certificate.rho,
                    "certificate": self.certificate(result.certificate)}
        return {"command": "radical", "answer": "No",
                "resolvent": result.resolvent.render() if result.resolvent is not None else None}

    def member_report(self, result) -> Dict[str, Any]:
        if isinstance(result, Member):
            return {"command": "member", "answer": "Member", "cap": result.cap,
                    "certificate": self.certificate(result.certificate)}
        return {"command": "member", "answer": "NotWithinCap", "cap": result.cap}

    def hilbert_report(self, table: HilbertFunctionTable) -> Dict[str, Any]:
        return {"command": "hilbert", **table.to_dict()}

    def wpnss_report(self, result) -> Dict[str, Any]:
        if isinstance(result, NoProjectiveZeros):
            return {
                "command": "wpnss",
                "answer": "NoProjectiveZeros",
                "r": result.r,
                "per_var": [
                    {"variable": name, "r": rho, "certificate": self.certificate(cert)}
                    for name, rho, cert in result.per_var
                ],
            }
        return {"command": "wpnss", "answer": "HasProjectiveZeros", "witness_var": result.witness_var}

    def certify_report(self, doc: CertificateDocument, ok: bool) -> Dict[str, Any]:
        return {"command": "certify-check", "kind": doc.kind.value, "rho": doc.rho, "verified": ok}

    # -- rendering -------------------------------------------------------

    @staticmethod
    def render_json(report: Dict[str, Any]) -> str:
        return json.dumps(report, sort_keys=True, indent=2)

    def render_text(self, report: Dict[str, Any], table: Optional[HilbertFunctionTable] = None) -> str:
        lines = ["=" * 60, f"NULLSATZ {report.get('command', '').upper()} REPORT", "=" * 60]
        answer = report.get("answer")
        if answer is not None:
            lines.append(f"🎯 Answer: {answer}")
        for key in sorted(report):
            if key in ("command", "answer", "chain"):
                continue
            value = report[key]
            if key == "values" and table is not None:
                lines.append("📊 Hilbert function:")
                lines.extend("   " + row for row in table.to_frame().to_string(index=False).splitlines())
            elif isinstance(value, dict):
                lines.append(f"📋 {key}:")
                lines.extend(f"   {k}: {v}" for k, v in sorted(value.items()))
            elif isinstance(value, list):
                lines.append(f"📋 {key} ({len(value)}):")
                lines.extend(f"   {i}. {item}" for i, item in enumerate(value, 1))
            else:
                lines.append(f"🔹 {key}: {value}")
        lines.append("=" * 60)
        return "\n".join(lines)
