"""
Finding numeric columns in a schema
===================================

Parse a table definition, look at sample values, and suggest an integer
type for every character column whose samples are fixed-width digits.
"""

from idrep.ddladvisor import advise, load_samples_csv, parse_ddl, render_ddl
from idrep.storagemodel import AccountingMode

ddl = """
CREATE TABLE student (
  SID varchar(10),
  UNIT_CODE varchar(100),
  NAME varchar(255),
  DATE_BIRTH date,
  SEX char(1),
  POSTCODE char(5)
);
"""
print(render_ddl(parse_ddl(ddl)))

samples = load_samples_csv(
    "SID,NAME,UNIT_CODE,SEX,POSTCODE\n"
    "30108001,Ananda Putera Perkasa,IS,1,40257\n"
    "40210123,Budi Santoso,CE,2,01234\n"
    "30309189,Citra Lestari,CA,2,40121\n"
)

for mode in AccountingMode:
    print(f"-- {mode.value}")
    for rec in advise(ddl, samples, mode=mode):
        print(
            f"{rec.column:<9} {rec.declared:<11} -> {rec.proposed_type.name:<9} "
            f"{rec.current_bytes:>3}B -> {rec.proposed_bytes}B  {rec.efficiency:6.2f}%"
        )
        for w in rec.warnings:
            print("   warning:", w)
