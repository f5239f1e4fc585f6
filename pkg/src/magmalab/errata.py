"""Registry of printed claims that brute-force computation contradicts.

Each entry stores the claim as printed (restated as a formula), the fact the
oracles compute instead, and the theorem or example keys it touches.  The
verifier and the fixture checker look entries up by id; an observed
discrepancy that matches a registered entry is reported as
PASS_WITH_ERRATA instead of FAIL.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Erratum:
    id: str
    claim: str
    fact: str
    affects: tuple[str, ...]


_ENTRIES = [
    Erratum("zsss-count",
            "|Z***(n)| = n(n-1)",
            "Z**(n) has (n-1)^2 members and 2(n-1) more pairs have one zero coefficient, so |Z***(n)| = n^2 - 1",
            ("3.4",)),
    Erratum("4.2.5-7P",
            "in Z_8(2,6), 7*{0,2,3,4,6} = {0,2,4,6}",
            "7*P = {0,2,6}; a left coset of a 5-element set has at most 3 elements here",
            ("4.2.5", "ex_4_2_5")),
    Erratum("4.2.4-aA",
            "in Z_8(2,6), a*A = A for every a when A = {0,2,4,6}",
            "0*A = {0,4}; only the unions G*A and A*G equal A",
            ("4.2.4", "ex_4_2_4")),
    Erratum("5.6.3-degenerate",
            "adjoined Z_n(t,u) is right alternative whenever t^2=1 and tu+u=0 (mod n)",
            "the congruence algebra skips the a*a=e branch; adjoined Z_4(1,2) fails at (1,3)",
            ("5.6.3",)),
    Erratum("3.1.6-composite",
            "t+u=n with t and u prime makes Z_n(t,u) simple",
            "for composite n this fails; Z_8(3,5) has normal subgroupoids {0,4} and {0,2,4,6}",
            ("3.1.6",)),
    Erratum("3.2.4-unique-normal",
            "under the hypotheses of the closed-subset construction, t*Z_n is the unique closed set of order n/t and it is normal",
            "Z_8(2,6): {0,2,4,6} is not normal; Z_12(3,9) has 7 closed sets of order 4",
            ("3.2.4",)),
    Erratum("4.2.6-direction",
            "every S-commutative groupoid is S-inner commutative",
            "Z_3(0,1) is S-commutative but not S-inner commutative; the converse implication holds on every SG scanned",
            ("4.2.6",)),
    Erratum("5.6.3-only-if",
            "the strong right alternative law on adjoined Z_n(t,u) forces t^2=1 and tu+u=0 (mod n)",
            "adjoined Z_4(0,1) satisfies it on every S-subgroupoid while t^2=0",
            ("5.6.3",)),
    Erratum("5.6.4-only-if",
            "the strong left alternative law on adjoined Z_n(t,u) forces u^2=1 and t+tu=0 (mod n)",
            "adjoined Z_4(1,0) satisfies it on every S-subgroupoid while u^2=0",
            ("5.6.4",)),
    Erratum("5.6.4-degenerate",
            "adjoined Z_n(t,u) is left alternative whenever u^2=1 and t+tu=0 (mod n)",
            "the congruence algebra skips the a*a=e branch; adjoined Z_6(4,5) fails at (1,3), where 1*(1*3) = e but (1*1)*3 = 3",
            ("5.6.4", "ex_5_6_3")),
    Erratum("5.6.5-only-when",
            "for composite n, adjoined Z_n(t,u) satisfies the strong Bol, Moufang and P laws only when t^2=t and u^2=u",
            "adjoined Z_4(1,2) satisfies all three on every S-subgroupoid (non-degenerate tuples) while u^2=0",
            ("5.6.5",)),
    Erratum("2.3.1-subgroupoids",
            "Z_12(1,4) has exactly the subgroupoids {0,4,8}, {1,5,9}, {2,6,10}, {3,7,11} and is inner commutative",
            "it has 29 proper closed subsets; {0,3} is closed with 0*3 = 0 and 3*0 = 3, so it is not inner commutative",
            ("ex_2_3_1",)),
    Erratum("3.2.8-only",
            "{0,2,4,6,8} is the only subgroupoid of Z_10(8,4)",
            "{0,5} and every superset of {0,2,4,6,8} are closed as well",
            ("ex_3_2_8",)),
    Erratum("4.2.7-inner",
            "Z_4(2,3) is Smarandache inner commutative",
            "the S-subgroupoid {0,2} is itself a semigroup and 0*2 = 2 differs from 2*0 = 0",
            ("ex_4_2_7",)),
    Erratum("5.1.5-closed-sets",
            "the subgroupoids of Z_9(5,3) are {0,3,6} and {1,2,4,5,7,8}",
            "{3,6} is closed too (it is not associative, so the SG verdict is unaffected)",
            ("ex_5_1_5",)),
    Erratum("5.3.2-witness",
            "Z_9(4,4) has no proper semigroup and is not an SG",
            "{0,3,6} is a commutative semigroup of Z_9(4,4)",
            ("ex_5_3_2",)),
    Erratum("5.6.2-left",
            "adjoined Z_6(5,3) is not even weakly Smarandache left alternative",
            "the S-subgroupoid {2,4,e} satisfies the left alternative law",
            ("ex_5_6_2",)),
    Erratum("6.2.2-operation",
            "delta(z,a) = z*a with the state groupoid Z_3(1,2)",
            "the printed table is 2z+2a mod 3, i.e. the input groupoid's coefficients (2,2) applied in Z_3",
            ("ex_6_2_2",)),
    Erratum("6.2.5-table",
            "the delta table is z*a in Z_5(3,2)",
            "the printed delta equals 3z+3a mod 5, i.e. coefficients (3,3)",
            ("6.2.5", "ex_6_2_5")),
    Erratum("5.1.8-iff",
            "for t+u=1 (mod n), P holds only if t^2=t and u^2=u",
            "P reduces to t^2-t = u^2-u, which always holds when t+u=1; every such SG satisfies P",
            ("5.1.8",)),
    Erratum("5.2.2-iff",
            "for t+u=1 (mod n) in Z*(n), idempotency needs t^2=t and u^2=u",
            "t+u=1 already makes every element idempotent",
            ("5.2.2",)),
    Erratum("5.3.6-only-if",
            "Z_n(m,m) is an SG only if 2m=1 (mod n)",
            "Z_6(3,3) has the semigroup {0,3} yet 2*3 = 0 (mod 6)",
            ("5.3.6",)),
    Erratum("5.3.4-half",
            "for even n, Z_n((n+1)/2,(n+1)/2) is the relevant member",
            "(n+1)/2 is not an integer for even n; the working member is Z_n(n/2,n/2)",
            ("5.3.4",)),
    Erratum("5.4.5-divides",
            "Z_n(p,0) is an SG when p does not divide n",
            "the proof's witness {0,n/p} needs p | n",
            ("5.4.5",)),
    Erratum("4.3.9-table",
            "the printed table is Z_12(1,6)",
            "row 7 differs from 7+6b mod 12 in every column",
            ("ex_4_3_9",)),
    Erratum("5.1.5-table",
            "the printed table is Z_9(5,3)",
            "row 5 columns 6,7,8 read 1,4,7 instead of 7,1,4",
            ("ex_5_1_5",)),
    Erratum("5.3.3-table",
            "the second printed table is Z_3(2,2)",
            "it repeats the Z_3(1,1) table",
            ("ex_5_3_3_b",)),
    Erratum("5.6.3-table",
            "the printed table is adjoined Z_6(4,5)",
            "entry 3*2 reads 3 instead of 4",
            ("ex_5_6_3",)),
    Erratum("z8-3-3-table",
            "the printed table is Z_8(3,3), commutative with no subgroupoid",
            "15 cells differ from 3a+3b mod 8 and the printed table is not commutative; the true Z_8(3,3) has closed sets {0,4} and {0,2,4,6}",
            ("prob_z8_3_3",)),
    Erratum("4.1.4-zero",
            "the 3-element table, which equals Z_3(1,2), is a Smarandache commutative groupoid via {a1}",
            "holds for the bespoke table with no designated zero; as Z_3(1,2) with residue 0 as zero the only semigroup is the trivial {0}",
            ("ex_4_1_4",)),
    Erratum("6.2.1-columns",
            "states {0,2} carry a sub semi automaton",
            "{0,2} is closed only under letters {0,2}; letters 1 and 3 leave it",
            ("ex_6_2_1",)),
]

REGISTRY: dict[str, Erratum] = {e.id: e for e in _ENTRIES}


def lookup(erratum_id: str) -> Erratum:
    return REGISTRY[erratum_id]


def for_key(key: str) -> list[Erratum]:
    """Entries that name ``key`` (a theorem or fixture key) among their targets."""
    return [e for e in _ENTRIES if key in e.affects]
