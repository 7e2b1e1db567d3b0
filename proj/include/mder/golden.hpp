#pragma once

// Reference values for a standard 52-card deck: 13 ranks, 4 cards each, no
// card may land on a position originally held by a card of the same rank.

#include <mder/exactcore.hpp>
#include <mder/shape.hpp>

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace mder::golden {

inline MultisetShape deck_shape() { return MultisetShape::repeated(4, 13); }

// Coefficients of a^1 .. a^26 of the cycle-weighted derangement polynomial.
inline constexpr std::array<std::string_view, 26> deck_coefficients = {
    "66394948050946830932484058263644488672722608355067055619597926400", // a^1
    "234426065400514976953417524798811902707109969381695319447196139520", // a^2
    "361148215004517312493645900517444844168859774724070502768740139008", // a^3
    "327547473685724687587188995032714624999930689030717701980120154112", // a^4
    "198159663830900044042641789039253865122617020230065397080602443776", // a^5
    "85647342705993322148148235777401007447932223607159691210985046016", // a^6
    "27602809328921835313793682068121303712142304270099611821308641280", // a^7
    "6825167923093955037138102373992833000704975000443998456569135104", // a^8
    "1320388339665569428585764027609539765653334771119656423470923776", // a^9
    "202569793911613274182929019082185092261014157201085369153486848", // a^10
    "24867048146672227309345666989913796704728810126752820020379648", // a^11
    "2455695605166443718371007842011087818790955115435503879454720", // a^12
    "195525408546538912690378251287680488219792943092212919435264", // a^13
    "12544166147808400841334081628081554018739662394272604225536", // a^14
    "646219419386602045907824228576682527851206056554484727808", // a^15
    "26556926811772603306934511893782498309330811792400580608", // a^16
    "861931009463580565142515454351924475556603802576486400", // a^17
    "21779385529606788308065066752435641655566027030790144", // a^18
    "420030513102996289545618495318355347968579239673856", // a^19
    "6015599331237497842549834616372527226200006852608", // a^20
    "61568711382255715699343414832865761752795578368", // a^21
    "425955227133577312273392421310068029118218240", // a^22
    "1829313185198525509532452983498671376039936", // a^23
    "4226160446928101410675933447042193424384", // a^24
    "3948815860811007759557670403206807552", // a^25
    "626486325682388256883179081695232", // a^26
};

// Number of deck derangements with same-rank cards identified.
inline constexpr std::string_view deck_identified_count = "1493804444499093354916284290188948031229880469556";

inline AlphaPolynomial deck_polynomial() {
    std::vector<Integer> c(27);
    for (std::size_t i = 0; i < deck_coefficients.size(); ++i) c[i + 1] = Integer(std::string(deck_coefficients[i]));
    return AlphaPolynomial(std::move(c));
}

} // namespace mder::golden
