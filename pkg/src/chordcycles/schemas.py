"""JSON schemas for the ``payload`` of each CLI subcommand's output."""

from __future__ import annotations

_INT = {"type": "integer"}
_INTS = {"type": "array", "items": _INT}
_RATIONAL = {
    "type": "object",
    "properties": {"num": _INT, "den": {"type": "integer", "minimum": 1}},
    "required": ["num", "den"],
    "additionalProperties": False,
}
_MAYBE_INF = {"oneOf": [_INT, {"const": "infinity"}]}
_EDGE = {"type": "array", "items": _INT, "minItems": 2, "maxItems": 2}
WITNESS = {
    "type": "object",
    "properties": {
        "cycle": {"type": "array", "items": _INT, "minItems": 3},
        "chords": {"type": "array", "items": _EDGE},
    },
    "required": ["cycle", "chords"],
    "additionalProperties": False,
}
_PATHS = {"type": "array", "items": _INTS}
_EAR = {
    "type": "object",
    "properties": {"a": _INT, "interior": _INTS, "b": _INT},
    "required": ["a", "interior", "b"],
}
EAR_DECOMPOSITION = {
    "type": "object",
    "properties": {"base_cycle": _INTS, "ears": {"type": "array", "items": _EAR}},
    "required": ["base_cycle", "ears"],
}
BLOCK_PATH = {
    "type": "object",
    "properties": {"blocks": _PATHS, "connectors": _PATHS, "pendants": _PATHS},
    "required": ["blocks", "connectors", "pendants"],
}
PACKING = {
    "type": "object",
    "properties": {
        "k": _INT,
        "cycles": {"type": "array", "items": WITNESS},
        "total_vertices": _INT,
        "status": {"enum": ["found", "exhausted", "inconclusive"]},
        "max_found": _INT,
        "nodes": _INT,
    },
    "required": ["k", "cycles", "total_vertices", "status"],
}
_REPORT = {"type": "object", "additionalProperties": _INT}

PAYLOADS = {
    "detect": {
        "type": "object",
        "properties": {"chorded": {"type": "boolean"}, "witness": {"oneOf": [WITNESS, {"type": "null"}]}},
        "required": ["chorded", "witness"],
    },
    "oracle": {
        "type": "object",
        "properties": {"non_chorded": {"type": "boolean"}},
        "required": ["non_chorded"],
    },
    "decompose": {
        "type": "object",
        "properties": {
            "kind": {"enum": ["ears", "block_path", "chorded_cycle", "block_cut"]},
            "block_cut": {
                "type": "object",
                "properties": {"blocks": _PATHS, "bridges": {"type": "array", "items": _EDGE},
                               "articulation_points": _INTS},
                "required": ["blocks", "bridges", "articulation_points"],
            },
            "decomposition": {"oneOf": [EAR_DECOMPOSITION, BLOCK_PATH, {"type": "null"}]},
            "witness": WITNESS,
            "stems": {
                "type": "object",
                "properties": {
                    "per_ear": _INTS,
                    "base": _INTS,
                    "stem_count": _INT,
                    "bound": _RATIONAL,
                    "passed": {"type": "boolean"},
                },
                "required": ["per_ear", "base", "stem_count", "bound", "passed"],
            },
        },
        "required": ["kind"],
    },
    "indep": {
        "type": "object",
        "properties": {"I": _INTS, "S": _INTS, "guarantee_num": _INT, "guarantee_den": _INT,
                       "size": _INT, "ceil_guarantee": _INT},
        "required": ["I", "S", "guarantee_num", "guarantee_den"],
    },
    "sigma": {
        "type": "object",
        "properties": {"t": _INT, "value": _MAYBE_INF, "witness": {"oneOf": [_INTS, {"type": "null"}]}},
        "required": ["t", "value", "witness"],
    },
    "pack": {
        "anyOf": [
            PACKING,
            {
                "type": "object",
                "properties": {
                    "k": _INT,
                    "cycles": {"type": "array", "items": WITNESS},
                    "total_vertices": _INT,
                    "status": {"const": "found"},
                    "minimal": {"const": True},
                    "properties": {
                        "type": "object",
                        "properties": {"long_cycles_checked": _INT, "max_outside_degree": _INT},
                    },
                },
                "required": ["k", "cycles", "total_vertices", "minimal"],
            },
        ]
    },
    "hypothesis": {
        "type": "object",
        "properties": {
            "n": {"type": ["integer", "null"]},
            "k": _INT,
            "t": _INT,
            "sigma": {"oneOf": [_MAYBE_INF, {"type": "null"}]},
            "order_threshold": _INT,
            "degree_threshold": _INT,
            "order_ok": {"type": ["boolean", "null"]},
            "degree_ok": {"type": ["boolean", "null"]},
            "prior_theorems": {"type": "object"},
        },
        "required": ["n", "k", "t", "sigma", "order_threshold", "degree_threshold", "order_ok", "degree_ok"],
    },
    "gen": {
        "type": "object",
        "properties": {
            "family": {"enum": ["bipartite", "g1", "g2"]},
            "params": _REPORT,
            "n": _INT,
            "m": _INT,
            "edge_list": {"type": "string"},
        },
        "required": ["family", "params", "n", "m", "edge_list"],
    },
    "sweep": {
        "type": "object",
        "properties": {"sweep": {"enum": ["conjecture", "fact1", "fact2", "prop4"]}, "max_n": _INT},
        "required": ["sweep", "max_n"],
    },
    "verify": {
        "type": "object",
        "properties": {"valid": {"type": "boolean"}, "k": _INT, "total_vertices": _INT},
        "required": ["valid"],
    },
}

ERROR = {
    "type": "object",
    "properties": {"error": {"type": "string"}, "message": {"type": "string"}},
    "required": ["error", "message"],
}

ENVELOPE = {
    "type": "object",
    "properties": {
        "command": {"type": "string"},
        "status": {"enum": ["ok", "no_witness", "inconclusive", "error"]},
        "payload": {"type": "object"},
    },
    "required": ["command", "status", "payload"],
    "additionalProperties": False,
}
