#!/usr/bin/env python3
"""Writes data/fixtures/geonames_in_slice.tsv in GeoNames dump layout.

Rows are hand-assembled: names and alternate names follow GeoNames usage,
coordinates and populations are approximate except where tests pin them
(Song, Sikkim). Ids are in the GeoNames range but not authoritative.
"""
import pathlib

# id, name, alternate names, lat, lon, class, code, country, admin1, population
ROWS = [
    (1269750, "Republic of India", "India,Bharat,Hindustan", 22.0, 79.0, "A", "PCLI", "IN", "00", 1352617328),
    # states and territories
    (1255053, "Tamil Nadu", "Tamilnadu", 11.0, 78.0, "A", "ADM1", "IN", "25", 72147030),
    (1267254, "Kerala", "Keralam", 10.41667, 76.5, "A", "ADM1", "IN", "13", 33406061),
    (1252881, "West Bengal", "Bengal,Paschimbanga", 23.0, 87.83333, "A", "ADM1", "IN", "28", 91276115),
    (1253626, "Uttar Pradesh", "UP,U.P.", 27.25, 80.75, "A", "ADM1", "IN", "36", 199812341),
    (1270770, "Gujarat", "Gujrat", 23.0, 72.0, "A", "ADM1", "IN", "09", 60439692),
    (1261029, "Odisha", "Orissa", 20.5, 84.41667, "A", "ADM1", "IN", "21", 41974218),
    (1278253, "Assam", "Asom", 26.0, 92.5, "A", "ADM1", "IN", "03", 31205576),
    (1275715, "Bihar", "", 25.75, 85.75, "A", "ADM1", "IN", "34", 104099452),
    (1258899, "Rajasthan", "", 26.58333, 73.83333, "A", "ADM1", "IN", "24", 68548437),
    (1256312, "Sikkim", "", 27.5, 88.5, "A", "ADM1", "IN", "29", 610577),
    (1278629, "Andhra Pradesh", "", 16.0, 80.0, "A", "ADM1", "IN", "02", 49386799),
    (1264418, "Maharashtra", "", 19.5, 76.0, "A", "ADM1", "IN", "16", 112374333),
    (1267701, "Karnataka", "Mysore State", 13.5, 76.0, "A", "ADM1", "IN", "19", 61095297),
    (1254788, "Telangana", "", 17.83333, 79.0, "A", "ADM1", "IN", "40", 35193978),
    (1259223, "Punjab", "", 30.83333, 75.41667, "A", "ADM1", "IN", "23", 27743338),
    (1271157, "Goa", "", 15.33333, 74.08333, "A", "ADM1", "IN", "33", 1458545),
    (1269320, "Jammu and Kashmir", "Kashmir", 33.5, 75.5, "A", "ADM1", "IN", "12", 12267032),
    (1264542, "Madhya Pradesh", "MP", 23.5, 78.5, "A", "ADM1", "IN", "35", 72626809),
    (1270260, "Himachal Pradesh", "", 31.91667, 77.25, "A", "ADM1", "IN", "11", 6864602),
    (1444366, "Uttarakhand", "Uttaranchal", 30.33333, 79.0, "A", "ADM1", "IN", "39", 10086292),
    (1273293, "National Capital Territory of Delhi", "NCT of Delhi", 28.66667, 77.16667, "A", "ADM1", "IN", "07", 16787941),
    # districts
    (1278069, "Banaskantha", "Banas Kantha", 24.25, 72.5, "A", "ADM2", "IN", "09", 3120506),
    # cities and towns
    (1275339, "Mumbai", "Bombay,Greater Mumbai", 19.07283, 72.88261, "P", "PPLA", "IN", "16", 12691836),
    (1273294, "Delhi", "Dilli", 28.65195, 77.23149, "P", "PPLA", "IN", "07", 10927986),
    (1261481, "New Delhi", "Nai Dilli", 28.63576, 77.22445, "P", "PPLC", "IN", "07", 317797),
    (1275004, "Kolkata", "Calcutta", 22.56263, 88.36304, "P", "PPLA", "IN", "28", 4631392),
    (1264527, "Chennai", "Madras", 13.08784, 80.27847, "P", "PPLA", "IN", "25", 4328063),
    (1277333, "Bengaluru", "Bangalore,Bengalooru", 12.97194, 77.59369, "P", "PPLA", "IN", "19", 5104047),
    (1259229, "Pune", "Poona", 18.51957, 73.85535, "P", "PPL", "IN", "16", 2935744),
    (1265873, "Kozhikode", "Calicut", 11.24802, 75.7804, "P", "PPL", "IN", "13", 437556),
    (1254187, "Thrissur", "Trichur", 10.51667, 76.21667, "P", "PPL", "IN", "13", 315596),
    (1254361, "Thiruvananthapuram", "Trivandrum", 8.4855, 76.94924, "P", "PPLA", "IN", "13", 784153),
    (1270668, "Guntur", "", 16.29974, 80.45729, "P", "PPL", "IN", "02", 530577),
    (1267755, "Karimnagar", "", 18.43503, 79.13221, "P", "PPL", "IN", "40", 205653),
    (1263752, "Mohali", "Sahibzada Ajit Singh Nagar,SAS Nagar", 30.67995, 76.72211, "P", "PPL", "IN", "23", 176152),
    (1274746, "Chandigarh", "", 30.73629, 76.7884, "P", "PPLA", "IN", "05", 914371),
    (1266976, "Kharagpur", "", 22.33071, 87.32319, "P", "PPL", "IN", "28", 188761),
    (1271476, "Ghatkopar", "", 19.08, 72.90, "P", "PPLX", "IN", "16", 0),
    (1278718, "Andheri", "", 19.11667, 72.83333, "P", "PPLX", "IN", "16", 0),
    (1253964, "Velachery", "", 12.97576, 80.22104, "P", "PPLX", "IN", "25", 0),
    (1254089, "Tambaram", "", 12.9229, 80.12718, "P", "PPL", "IN", "25", 174787),
    (1271476 + 1, "Guwahati", "Gauhati", 26.1844, 91.7458, "P", "PPL", "IN", "03", 899094),
    (1256237, "Shimla", "Simla", 31.10442, 77.16662, "P", "PPLA", "IN", "11", 173503),
    (1264733, "Lucknow", "", 26.83928, 80.92313, "P", "PPLA", "IN", "36", 2472011),
    (1279233, "Ahmedabad", "Amdavad", 23.02579, 72.58727, "P", "PPL", "IN", "09", 3719710),
    (1259184, "Puri", "Jagannath Puri", 19.8, 85.81667, "P", "PPL", "IN", "21", 157837),
    (1277168, "Barmer", "", 25.75, 71.38333, "P", "PPL", "IN", "24", 83517),
    (1269507, "Jaisalmer", "", 26.91667, 70.91667, "P", "PPL", "IN", "24", 58286),
    (1270642, "Gujranwala", "", 28.6935, 77.1872, "P", "PPLX", "IN", "07", 0),
    (1262180, "Navi Mumbai", "New Bombay", 19.03681, 73.01582, "P", "PPL", "IN", "16", 2600000),
    (1275841, "Bidhannagar", "Salt Lake,Salt Lake City", 22.5864, 88.4172, "P", "PPL", "IN", "28", 215514),
    (1270396, "Howrah", "Haora", 22.57688, 88.31857, "P", "PPL", "IN", "28", 1077075),
    (1269843, "Hyderabad", "", 17.38405, 78.45636, "P", "PPLA", "IN", "40", 3597816),
    (1269515, "Jaipur", "", 26.91962, 75.78781, "P", "PPLA", "IN", "24", 2711758),
    (1260086, "Patna", "", 25.59408, 85.13563, "P", "PPLA", "IN", "34", 1599920),
    (1275817, "Bhubaneswar", "Bhubaneshwar", 20.27241, 85.83385, "P", "PPLA", "IN", "21", 762243),
    (1255634, "Srinagar", "", 34.08565, 74.80555, "P", "PPLA", "IN", "12", 975857),
    (1273313, "Dehradun", "Dehra Dun", 30.32443, 78.03392, "P", "PPLA", "IN", "39", 530263),
    (7279746, "Noida", "", 28.58, 77.33, "P", "PPL", "IN", "36", 642381),
    (1270642 + 1, "Gurgaon", "Gurugram", 28.4601, 77.02635, "P", "PPL", "IN", "10", 197340),
    (1253405, "Varanasi", "Benares,Banaras", 25.31668, 83.01041, "P", "PPL", "IN", "36", 1164404),
    (1279259, "Agra", "", 27.18333, 78.01667, "P", "PPL", "IN", "36", 1430055),
    (1267995, "Kanpur", "Cawnpore", 26.46523, 80.34975, "P", "PPL", "IN", "36", 2823249),
    (1255364, "Surat", "", 21.19594, 72.83023, "P", "PPL", "IN", "09", 2894504),
    (1262180 + 1, "Nagpur", "", 21.14631, 79.08491, "P", "PPL", "IN", "16", 2228018),
    (1269743, "Indore", "", 22.71792, 75.8333, "P", "PPL", "IN", "35", 1837041),
    (1275841 + 1, "Bhopal", "", 23.25469, 77.40289, "P", "PPLA", "IN", "35", 1599914),
    (1253102, "Visakhapatnam", "Vizag,Vishakhapatnam", 17.68009, 83.20161, "P", "PPL", "IN", "02", 1063178),
    (1253184, "Vijayawada", "Bezwada", 16.50745, 80.6466, "P", "PPL", "IN", "02", 874587),
    (1264521, "Madurai", "", 9.91735, 78.11962, "P", "PPL", "IN", "25", 909908),
    (1273865, "Coimbatore", "", 11.00555, 76.96612, "P", "PPL", "IN", "25", 959823),
    (1263780, "Mangaluru", "Mangalore", 12.91723, 74.85603, "P", "PPL", "IN", "19", 417387),
    (1262321, "Mysuru", "Mysore", 12.29791, 76.63925, "P", "PPL", "IN", "19", 868313),
    (1273874, "Kochi", "Cochin", 9.93988, 76.26022, "P", "PPL", "IN", "13", 604696),
    (1278985, "Alappuzha", "Alleppey", 9.49004, 76.3264, "P", "PPL", "IN", "13", 176783),
    (1265911, "Kottayam", "", 9.58692, 76.52132, "P", "PPL", "IN", "13", 60725),
    (1256045, "Silchar", "", 24.82733, 92.79787, "P", "PPL", "IN", "03", 152393),
    (1269771, "Imphal", "", 24.80805, 93.9442, "P", "PPLA", "IN", "17", 250234),
    (1256523, "Shillong", "", 25.56892, 91.88313, "P", "PPLA", "IN", "18", 143007),
    (1279186, "Aizawl", "", 23.72798, 92.71732, "P", "PPLA", "IN", "31", 265331),
    (1267480, "Kohima", "", 25.67467, 94.11099, "P", "PPLA", "IN", "20", 92113),
    (1279159, "Agartala", "", 23.83605, 91.27939, "P", "PPLA", "IN", "26", 203264),
    (1271631, "Gangtok", "", 27.32574, 88.61216, "P", "PPLA", "IN", "29", 100286),
    (1273467, "Darjeeling", "Darjiling", 27.04104, 88.26636, "P", "PPL", "IN", "28", 120414),
    (1256525, "Siliguri", "", 26.71004, 88.42851, "P", "PPL", "IN", "28", 515574),
    (1258526, "Ranchi", "", 23.34316, 85.3094, "P", "PPLA", "IN", "38", 846454),
    (1269300, "Jamshedpur", "Tatanagar", 22.80278, 86.18545, "P", "PPL", "IN", "38", 629659),
    (1258980, "Raipur", "", 21.23333, 81.63333, "P", "PPLA", "IN", "37", 679995),
    (1260607, "Panaji", "Panjim", 15.49574, 73.82624, "P", "PPLA", "IN", "33", 114759),
    # homonyms
    (1278149, "Aurangabad", "", 19.87757, 75.34226, "P", "PPL", "IN", "16", 1016441),
    (1278148, "Aurangabad", "", 24.75204, 84.3742, "P", "PPL", "IN", "34", 95929),
    (1259826, "Pipra", "", 26.2, 84.9, "P", "PPL", "IN", "34", 5000),
    (1259825, "Pipra", "", 26.48, 85.12, "P", "PPL", "IN", "34", 5000),
    (1259827, "Pipra", "", 25.3, 82.5, "P", "PPL", "IN", "36", 3000),
    # places that are also common English words
    (1256095, "Song", "", 27.24641, 88.50622, "P", "PPL", "IN", "29", 0),
    (1259690, "Parole", "", 18.9, 73.3, "P", "PPL", "IN", "16", 0),
    (1262793, "Monsoon", "", 25.61, 85.05, "P", "PPL", "IN", "34", 0),
    (1253811, "Uru", "", 9.6, 76.4, "P", "PPL", "IN", "13", 0),
    # natural features
    (1252794, "Yamuna", "Jumna,Yamuna River", 25.41667, 81.83333, "H", "STM", "IN", "36", 0),
    (1264280, "Marina Beach", "", 13.0500, 80.2824, "T", "BCH", "IN", "25", 0),
    (1273744, "Dal Lake", "Dal", 34.11, 74.86, "H", "LK", "IN", "12", 0),
    (1273492, "Sundarbans", "Sunderbans", 21.94, 88.9, "L", "FRST", "IN", "28", 0),
    # outside India, dropped by the country filter
    (5115162, "Delhi", "", 42.27813, -74.91599, "P", "PPL", "US", "NY", 3093),
    (1283240, "Kathmandu", "Kantipur", 27.70169, 85.3206, "P", "PPLC", "NP", "00", 1442271),
]


def ascii_name(name: str) -> str:
    return name.encode("ascii", "ignore").decode()


def main() -> None:
    ids = [r[0] for r in ROWS]
    assert len(ids) == len(set(ids)), "duplicate geoname id"
    out = pathlib.Path(__file__).resolve().parents[1] / "fixtures" / "geonames_in_slice.tsv"
    with out.open("w", encoding="utf-8", newline="\n") as f:
        for gid, name, alts, lat, lon, fcls, fcode, cc, admin1, pop in ROWS:
            cols = [
                str(gid), name, ascii_name(name), alts, f"{lat:.5f}", f"{lon:.5f}", fcls, fcode, cc, "",
                admin1, "", "", "", str(pop), "", "0", "Asia/Kolkata", "2019-01-01",
            ]
            f.write("\t".join(cols) + "\n")


if __name__ == "__main__":
    main()
