#!/usr/bin/env python3
"""Writes data/fixtures/gold_corpus.jsonl.

Gold labels are hand annotations: every place name a reader would mark,
written as it appears in the tweet (including places the bundled
gazetteer cannot resolve, such as hospitals).
"""
import json
import pathlib

TWEETS = [
    ("t01", "Will discuss on @TimesNow at 8.30 am today regarding Dengue Fever in Tamil Nadu.", ["Tamil Nadu"]),
    ("t02", "Urgent B+ group platelets suffering from dengue,Ankit Arora  At Vinayak hospital, Gujranwala town,delhi",
     ["Vinayak hospital", "Gujranwala town", "delhi"]),
    ("t03", "Urgent B + blood needed for a crit dengue patient at May Hosp. , Mohali,(Chandigarh)",
     ["May Hosp", "Mohali", "Chandigarh"]),
    ("t04", "We need O-ve blood grup for 8 years boy suffering with dengue in star hospital in karimnagar , please Contact",
     ["star hospital", "karimnagar"]),
    ("t05", "@rajeev_mp  seems its time to rename Bangalore as Floods city I/O silicon city.", ["Bangalore"]),
    ("t06", "Mumbai lost its mudflats and wetlands, now floods with every monsoon.", ["Mumbai"]),
    ("t07", "Numerous death in Kerala from Dengue,  Chicken guinea, Malaria @cpimspeak pushed Kerala into a money order",
     ["Kerala"]),
    ("t08", "@Bhayankur Hmmm - not rosy in Kerala either ...", ["Kerala"]),
    ("t09", "Dengue : 5 worst affected states. Scandinavian level HDI state Kerala tops the list ...", ["Kerala"]),
    ("t10", "45% of Dengue cases and nearly half the Dengue related deaths in India from Kerala. Too much filth or related to",
     ["India", "Kerala"]),
    ("t11", "@Rameshnair101 @CNNnews18 Dengue cases reported: UP 302 Kerala 16530 .death due to dengue: UP 17, Kerala 28",
     ["Kerala", "UP"]),
    ("t12", "Heavy rain continues, roads flooded near Velachery #ChennaiFloods", ["Velachery", "Chennai"]),
    ("t13", "#GujaratFloods: army deployed for rescue operations in Banaskantha", ["Gujarat", "Banaskantha"]),
    ("t14", "Traffic crawls on the outer ring road as rains lash #Bengaluru", ["Bengaluru"]),
    ("t15", "#KolkataRains waterlogging reported across Salt Lake and Howrah", ["Kolkata", "Salt Lake", "Howrah"]),
    ("t16", "This song has been on repeat all monsoon, my favourite song ever", []),
    ("t17", "Court grants parole to the accused in the 2015 case", []),
    ("t18", "Stay safe everyone, drink boiled water and keep your surroundings clean", []),
    ("t19", "dengue cases rising in pipra village, bihar health officials on alert", ["pipra village", "bihar"]),
    ("t20", "Cyclone warning issued for Puri district of Odisha, fishermen asked not to venture into sea",
     ["Puri", "Odisha"]),
    ("t21", "Yamuna river in Delhi crosses danger mark after heavy rains", ["Yamuna river", "Delhi"]),
    ("t22", "Water entered houses near Marina beach, Chennai after the cyclone", ["Marina beach", "Chennai"]),
    ("t23", "Heatwave kills 12 in Rajasthan, Barmer and Jaisalmer worst hit", ["Rajasthan", "Barmer", "Jaisalmer"]),
    ("t24", "Earthquake of magnitude 5.2 jolts Guwahati and parts of Assam", ["Guwahati", "Assam"]),
    ("t25", "Landslide blocks highway near Shimla, tourists stranded", ["Shimla"]),
    ("t26", "Malaria outbreak in Kozhikode and Thrissur districts", ["Kozhikode", "Thrissur"]),
    ("t27", "Floods in Guntur and Karimnagar after heavy overnight rain", ["Guntur", "Karimnagar"]),
    ("t28", "dengue in kerala, hospitals full in thiruvananthapuram", ["kerala", "thiruvananthapuram"]),
    ("t29", "Cholera cases reported from Ghatkopar and Andheri in Mumbai", ["Ghatkopar", "Andheri", "Mumbai"]),
    ("t30", "Swine flu deaths rise in Pune and Ahmedabad", ["Pune", "Ahmedabad"]),
    ("t31", "Water logging at Tambaram railway station, trains delayed", ["Tambaram"]),
    ("t32", "Flood relief camps opened in Lucknow and Aurangabad", ["Lucknow", "Aurangabad"]),
    ("t33", "Flash floods near Song wash away bridge in Sikkim", ["Song", "Sikkim"]),
]


def main() -> None:
    out = pathlib.Path(__file__).resolve().parents[1] / "fixtures" / "gold_corpus.jsonl"
    with out.open("w", encoding="utf-8", newline="\n") as f:
        for i, (tid, text, gold) in enumerate(TWEETS):
            day = 10 + i % 5
            hour = (i * 5) % 24
            rec = {"id": tid, "text": text, "created_at": f"2017-09-{day:02d}T{hour:02d}:{(i * 7) % 60:02d}:00Z",
                   "gold": gold}
            f.write(json.dumps(rec, ensure_ascii=False) + "\n")


if __name__ == "__main__":
    main()
