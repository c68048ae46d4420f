from .catalog import (CATALOG_PATH, CatalogEntry, FAMILIES, abelian, heisenberg, filiform, random_algebra, builtin, parse_spec,
                      from_spec, parse, serialize, load_catalog, catalog_algebras)
