"""
Student ids: validate, parse, pack
==================================

A student id is 8 digits: degree level (1), study program (2), entry
year (2) and a sequence number (3).  The bundled schema encodes those
rules; ``pack`` turns a valid id into an integer and ``unpack`` renders it
back at full width.
"""

from idrep.idschema import pack, parse_id, recommended_type, sid_schema, unpack, validate

sid = sid_schema()
print(f"{sid.name}: {[(f.name, f.width, f.kind) for f in sid.fields]}, total {sid.total_width} digits")

for raw in ["30108001", "40210123", "50108001", "3010800"]:
    report = validate(sid, raw)
    print(raw, "ok" if report.ok else "; ".join(map(str, report.violations)))

parsed = parse_id(sid, "40210123")
for c in parsed.components:
    print(f"  {c.field:<8} {c.digits:<4} {c.label or ''}")

# Packing keeps order and is lossless as long as the width is known.
v = pack(sid, "30108001")
print(v, "->", unpack(sid, v))
print("recommended integer type:", recommended_type(sid).name)
