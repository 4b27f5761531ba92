/// (system, register, value, form) for every number word listed in the
/// source tables.
pub const CORPUS: &[(&str, Option<&str>, u64, &str)] = &[
    ("yasayama", None, 1, "omoko"),
    ("yasayama", None, 2, "bafe"),
    ("yasayama", None, 3, "basasu"),
    ("yasayama", None, 4, "bane"),
    ("yasayama", None, 5, "lioke"),
    ("yasayama", None, 6, "lioke lomoko"),
    ("yasayama", None, 7, "lioke lafe"),
    ("yasayama", None, 8, "lioke lasasu"),
    ("yasayama", None, 9, "lioke lane"),
    ("yasayama", None, 10, "bokama"),
    ("yasayama", None, 11, "bokama lomoko"),
    ("yasayama", None, 12, "bokama lafe"),
    ("baali", None, 1, "imoti"),
    ("baali", None, 2, "ibale"),
    ("baali", None, 3, "isyau"),
    ("baali", None, 4, "zena"),
    ("baali", None, 5, "boko"),
    ("baali", None, 6, "madia"),
    ("baali", None, 7, "madea neka"),
    ("baali", None, 8, "bapibale"),
    ("baali", None, 9, "bapibale nemoti"),
    ("baali", None, 10, "bapibale nibale"),
    ("baali", None, 11, "akomoboko na imoti"),
    ("baali", None, 12, "komba"),
    ("baali", None, 13, "komba nimoti"),
    ("baali", None, 14, "komba nibale"),
    ("baali", None, 15, "komba nisyau"),
    ("baali", None, 24, "idingo"),
    ("baali", None, 25, "idingo nemoti"),
    ("baali", None, 36, "idingo na komba"),
    ("baali", None, 37, "idingo na komba nemoti"),
    ("baali", None, 48, "modingo mabale"),
    ("baali", None, 49, "modingo mabale nemoti"),
    ("baali", None, 576, "modingo idingo"),
    ("baali", None, 577, "modingo idingo nemoti"),
    ("nyali", None, 1, "ingane"),
    ("nyali", None, 2, "iwili"),
    ("nyali", None, 3, "iletu"),
    ("nyali", None, 4, "gena"),
    ("nyali", None, 5, "boko"),
    ("nyali", None, 6, "madea"),
    ("nyali", None, 7, "mayeneka"),
    ("nyali", None, 8, "bagená"),
    ("nyali", None, 24, "bwa"),
    ("nyali", None, 576, "mabwabwa"),
    ("ndaaka", None, 10, "bokuboku"),
    ("ndaaka", None, 12, "bokuboku no bepi"),
    ("ndaaka", None, 32, "edi"),
    ("ndaaka", None, 64, "edibepi"),
    ("ndaaka", None, 1024, "edidi"),
    ("ndaaka", None, 1025, "edidi negana"),
    ("burundi_cattle", None, 6, "itandatu"),
    ("burundi_cattle", None, 7, "indwi"),
    ("burundi_cattle", Some("cattle"), 6, "itano n'umwe"),
    ("burundi_cattle", Some("cattle"), 7, "itano n' iwiri"),
    ("shambaa", None, 6, "mutandatu"),
    ("shambaa", None, 7, "mufungate"),
    ("shambaa", None, 8, "munane"),
    ("shambaa", None, 9, "kenda"),
    ("quevedo", None, 1, "1"),
    ("quevedo", None, 2, "2"),
    ("quevedo", None, 3, "3"),
    ("quevedo", None, 4, "2+2"),
    ("quevedo", None, 5, "2+3"),
    ("quevedo", None, 6, "2x3"),
    ("quevedo", None, 7, "1+2x3"),
    ("quevedo", None, 8, "2x4"),
    ("quevedo", None, 9, "2x4+1"),
    ("quevedo", None, 10, "2x4+2"),
    ("yagua", None, 1, "unyi"),
    ("yagua", None, 2, "mva"),
    ("yagua", None, 3, "ntad"),
    ("yagua", None, 4, "nna"),
    ("yagua", None, 5, "nto"),
    ("yagua", None, 6, "ndshi"),
    ("yagua", None, 7, "tomva"),
    ("yagua", None, 8, "tondad"),
    ("yagua", None, 9, "tola"),
    ("yagua", None, 10, "nko"),
    ("yagua", None, 11, "umvi"),
    ("yagua", None, 12, "nsog"),
    ("yagua", None, 13, "nsoi"),
    ("yagua", None, 14, "nsoava"),
    ("yagua", None, 15, "nsoatad"),
    ("yagua", None, 16, "nsoana"),
    ("yagua", None, 17, "nsoata"),
    ("yagua", None, 18, "nsodso"),
    ("yagua", None, 19, "nsotomva"),
    ("yagua", None, 20, "nsotondad"),
    ("koro", None, 1, "alo"),
    ("koro", None, 2, "abe"),
    ("koro", None, 3, "adse"),
    ("koro", None, 4, "anar"),
    ("koro", None, 5, "azu"),
    ("koro", None, 6, "avizi"),
    ("koro", None, 7, "avitar"),
    ("koro", None, 8, "anu"),
    ("koro", None, 9, "ozakie"),
    ("koro", None, 10, "ozabe"),
    ("koro", None, 11, "zoelo"),
    ("koro", None, 12, "agowizoe"),
    ("koro", None, 13, "plalo"),
    ("koro", None, 14, "plabe"),
    ("koro", None, 15, "pladsie"),
    ("koro", None, 16, "planar"),
    ("koro", None, 17, "planu"),
    ("koro", None, 18, "plavizi"),
    ("koro", None, 19, "plavita"),
    ("koro", None, 20, "plarnu"),
    ("huku_walegga", None, 7, "6+1"),
    ("huku_walegga", None, 8, "2×4"),
    ("huku_walegga", None, 16, "(2×4)×2"),
    ("huku_walegga", None, 20, "10×2"),
];
