"""Build the Goeritz group of L(p, 1) as an amalgam and compare it with the
closed-form presentation, case by case."""
from lensgoeritz.fpgroups import TietzeLog
from lensgoeritz.goeritz import (goeritz_amalgam, goeritz_constructed, goeritz_stated,
                                 stabilizer_data, verify_goeritz)


def main():
    for p in (2, 3, 4):
        data = stabilizer_data(p)
        print(f"== p = {p}")
        print("  black:", data.black)
        print("  white:", data.white)
        print("  edge: ", data.edge)
        print("  raw amalgam has", len(goeritz_amalgam(p).relators), "relators")
        log = TietzeLog()
        simplified = goeritz_constructed(p, log=log)
        print("  after", len(log.moves), "Tietze moves:", simplified)
        print("  stated:              ", goeritz_stated(p))
        rep = verify_goeritz(p, 4)
        counts = {n: v["constructed"] for n, v in rep.hom_counts.items()}
        print(f"  abelianization {rep.abelian['constructed']}, |Hom(G, S_n)| {counts}, "
              f"identical after simplification: {rep.tietze_identity}")


if __name__ == "__main__":
    main()
