#pragma once

namespace sags::test {

struct BleuGolden {
  const char* candidate;
  const char* reference;
  double bleu, rouge1, rouge2;
};

// Computed by the naive oracle in metrics_test and an independent script,
// then frozen.
inline constexpr BleuGolden kBleuGolden[] = {
    {"the cat sat on the mat", "the cat sat on the mat", 1, 1, 1},
    {"the cat is on the mat", "there is a cat on the mat", 0.19274443660283733, 0.7142857142857143,
     0.33333333333333331},
    {"how can i learn python quickly ?", "what is the fastest way to learn python ?", 0.057450702716158632,
     0.33333333333333331, 0.125},
    {"where can i go hiking in spain ?", "what are good places for hiking in spain ?", 0.30509752160562892,
     0.44444444444444442, 0.375},
    {"a b c d e f g h i j", "k l m n o p q r s t", 0.011727986748186982, 0, 0},
    {"what is the best way to lose weight ?", "how do i lose weight fast ?", 0.055692939868598398,
     0.42857142857142855, 0.16666666666666666},
    {"is it possible to learn french in one year ?", "can i learn french in a year ?", 0.130880547621441, 0.625,
     0.42857142857142855},
    {"the the the the", "the cat the mat", 0.091411131061748294, 0.5, 0},
    {"why do people believe in luck ?", "why do so many people believe in luck ?", 0.53137468984124525,
     0.77777777777777779, 0.625},
    {"one two three four", "one two three four five six seven eight", 0.36787944117144233, 0.5,
     0.42857142857142855},
};

}  // namespace sags::test
