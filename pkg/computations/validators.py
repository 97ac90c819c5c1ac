from typing import Dict, List

from django.conf import settings

from algebra.eigenvalue_orbits import FieldParam
from algebra.weyl import Family
from pairings.families import family_for

from .codecs import decode_pair, decode_series


class JobValidator:
    @staticmethod
    def validate_pair_job(job: Dict) -> List[str]:
        errors = []
        field = FieldParam(job['q'])
        pairs = {}
        for side in ('big', 'small'):
            try:
                pairs[side] = decode_pair(job[side], field)
            except (KeyError, ValueError) as e:
                errors.append(f"{side}: {e}")
        if errors:
            return errors

        big, small = pairs['big'], pairs['small']
        try:
            family = family_for(big.kind)
        except ValueError as e:
            return [str(e)]
        if family.name != job['pair_kind']:
            errors.append(f"pair_kind {job['pair_kind']} does not match {big.kind}")
        try:
            family.check_groups(big.kind, small.kind)
        except ValueError as e:
            errors.append(str(e))
        return errors

    @staticmethod
    def validate_series_job(job: Dict) -> List[str]:
        errors = []
        field = FieldParam(job['q'])
        for side in ('pi', 'sigma'):
            try:
                datum = decode_series(job[side], field)
            except (KeyError, ValueError) as e:
                errors.append(f"{side}: {e}")
                continue
            if datum.group.family in (Family.GL, Family.SP):
                errors.append(f"{side}: {datum.group} is not part of a Bessel pair")
            for orbit in datum.orbits:
                if orbit.lam.size != orbit.nu:
                    errors.append(f"{side}: label {list(orbit.lam.parts)} does not match nu={orbit.nu}")
        return errors

    @staticmethod
    def validate_oracle_bound(bound: int) -> List[str]:
        limit = min(settings.GGP_ORACLE_BOUND_LINEAR, settings.GGP_ORACLE_BOUND_SIGNED)
        if bound > limit:
            return [f"Oracle bound {bound} exceeds the enumeration limit {limit}"]
        return []
