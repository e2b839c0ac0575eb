"""One-off generator for docs/schema/*.json (run from repo root)."""
import json
from pathlib import Path

METRIC_SLUGS = [
    "community_attachment", "social_offerings", "openness", "aesthetics",
    "education", "basic_services", "leadership", "economy", "safety",
    "social_capital", "civic_involvement",
]
REGION_SLUGS = ["great_plains", "west", "deep_south", "southeast", "rust_belt"]
YEARS = {"type": "string", "enum": ["all", "2008", "2009", "2010"]}
NUM_OR_NULL = {"type": ["number", "null"]}
COUNT = {"type": "integer", "minimum": 0}

CELL_PROPS = {
    "mean": NUM_OR_NULL,
    "mean_display": NUM_OR_NULL,
    "n": COUNT,
    "n_missing": COUNT,
}

def obj(props, required=None, extra=None):
    out = {
        "type": "object",
        "properties": props,
        "required": sorted(required if required is not None else props),
        "additionalProperties": False,
    }
    if extra:
        out.update(extra)
    return out

def arr(items):
    return {"type": "array", "items": items}

metric = {"type": "string", "enum": METRIC_SLUGS}

community_record = obj({
    "id": {"type": "string"},
    "display_name": {"type": "string"},
    "region": {"type": "string", "enum": REGION_SLUGS},
    "urbanicity": {"type": "string", "minLength": 1},
    "latitude": {"type": "number", "minimum": -90, "maximum": 90},
    "longitude": {"type": "number", "minimum": -180, "maximum": 180},
    "inferred_region": {"type": "boolean"},
})

profile_entry = obj({
    "metric": metric,
    "r": {"type": ["number", "null"], "minimum": -1, "maximum": 1},
    "r_display": NUM_OR_NULL,
    "n_pairs": COUNT,
})

schemas = {
    "health": obj({
        "status": {"type": "string", "enum": ["ok"]},
        "rows": COUNT,
        "build": obj({"name": {"type": "string"}, "version": {"type": "string"}}),
    }),
    "communities": obj({"communities": arr(community_record)}),
    "map": obj({
        "metric": metric,
        "years": YEARS,
        "entries": arr(obj({
            "id": {"type": "string"},
            "display_name": {"type": "string"},
            "latitude": {"type": "number"},
            "longitude": {"type": "number"},
            "n": COUNT,
            "mean": NUM_OR_NULL,
            "mean_display": NUM_OR_NULL,
            "n_metric": COUNT,
            "n_missing": COUNT,
        })),
    }),
    "bars": obj({
        "community": {"type": "string"},
        "metric": metric,
        "years": YEARS,
        "bars": {
            "type": "array", "minItems": 4, "maxItems": 4,
            "items": obj({
                "label": {"type": "string"},
                "level": {"type": "string", "enum": ["community", "urbanicity", "region", "all"]},
                **CELL_PROPS,
            }),
        },
    }),
    "dotplot": obj({
        "metric": metric,
        "years": YEARS,
        "entries": arr(obj({
            "id": {"type": "string"},
            "display_name": {"type": "string"},
            "region": {"type": "string", "enum": REGION_SLUGS},
            "urbanicity": {"type": "string"},
            **CELL_PROPS,
        })),
        "omitted": arr({"type": "string"}),
    }),
    "correlations": obj({
        "level": {"type": "string"},
        "id": {"type": ["string", "null"]},
        "years": YEARS,
        "profile": {"type": "array", "minItems": 10, "maxItems": 10, "items": profile_entry},
        "reference": {"type": "array", "minItems": 10, "maxItems": 10, "items": profile_entry},
    }),
    "bin2d": obj({
        "x": metric,
        "y": metric,
        "years": YEARS,
        "x_edges": {"type": "array", "minItems": 2, "items": {"type": "number"}},
        "y_edges": {"type": "array", "minItems": 2, "items": {"type": "number"}},
        "counts": arr(arr(COUNT)),
        "n_pairs": COUNT,
    }),
    "series": obj({
        "metric": metric,
        "series": arr(obj({
            "id": {"type": "string"},
            "display_name": {"type": "string"},
            "aggregate_mean": NUM_OR_NULL,
            "aggregate_mean_display": NUM_OR_NULL,
            "by_year": {
                "type": "object",
                "propertyNames": {"enum": ["2008", "2009", "2010"]},
                "additionalProperties": obj(dict(CELL_PROPS)),
            },
        })),
    }),
    "parallel": obj({
        "years": YEARS,
        "axes": {"type": "array", "minItems": 11, "maxItems": 11, "items": metric},
        "lines": arr(obj({
            "id": {"type": "string"},
            "display_name": {"type": "string"},
            "values": {"type": "array", "minItems": 11, "maxItems": 11, "items": NUM_OR_NULL},
        })),
    }),
    "density": obj({
        "metric": metric,
        "years": YEARS,
        "level": {"type": "string"},
        "id": {"type": ["string", "null"]},
        "bandwidth": {"type": "number", "exclusiveMinimum": 0},
        "n": {"type": "integer", "minimum": 2},
        "grid": {"type": "array", "minItems": 16, "items": {"type": "number"}},
        "density": {"type": "array", "minItems": 16, "items": {"type": "number", "minimum": 0}},
    }),
    "error": obj({
        "code": {"type": "string"},
        "message": {"type": "string"},
    }),
}

out = Path(__file__).resolve().parent.parent / "docs" / "schema"
out.mkdir(parents=True, exist_ok=True)
for name, schema in schemas.items():
    body = {
        "$schema": "http://json-schema.org/draft-07/schema#",
        "$id": f"https://attache.local/schema/{name}.json",
        "title": f"{name} endpoint response",
        **schema,
    }
    (out / f"{name}.json").write_text(json.dumps(body, indent=2) + "\n")
    print("wrote", name)
