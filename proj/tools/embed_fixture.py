#!/usr/bin/env python3
"""Regenerates include/ecn/classification_fixture.hpp from data/classification.json."""
import json
import pathlib

root = pathlib.Path(__file__).resolve().parent.parent
text = (root / "data" / "classification.json").read_text()
json.loads(text)  # refuse to embed malformed data
out = root / "include" / "ecn" / "classification_fixture.hpp"
out.write_text(
    "// Generated by tools/embed_fixture.py from data/classification.json. Do not edit.\n"
    "#pragma once\n\n"
    "#include <string_view>\n\n"
    "namespace ecn {\n\n"
    "inline constexpr std::string_view kClassificationFixture = R\"json(" + text + ")json\";\n\n"
    "}  // namespace ecn\n"
)
print(f"wrote {out}")
