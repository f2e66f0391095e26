#include "helix/catalog.hpp"

namespace helix {

// The published low-order catalog, transcribed verbatim. Foundations are
// encoded by entry indices (O(n) = n, T(-1) = 1/3, T^v(2) = 2/3, and the
// bundle printed as E_mu by its epsilon index). "^v" marks a dual; twists
// follow in parentheses. A printed-multiplicity of 0 records that the
// table omits the exponent.
const std::vector<PrintedRow>& reference_table() {
    static const std::vector<PrintedRow> rows = {
        {"T(-1)", "1/3", 1, "1/3",
         {"3", "1", "-1/2", "1/6"}, 4,
         {"0", "1/3", "1", "2"},
         {4, 6},
         {"O(-1) -> O^4 -> T(-1)", "T(-1) -> O(1)^6 -> T^v(3)"}},
        {"T^v(2)", "2/3", 1, "2/3",
         {"3", "2", "2", "-2/3"}, 6,
         {"-1", "0", "2/3", "1"},
         {4, 6},
         {"T^v(2) -> O(1)^4 -> O(2)", "T(-2) -> O^6 -> T^v(2)"}},
        {"E_{2/9}", "1/9", 2, "2/9",
         {"9", "2", "-2", "4/3"}, 10,
         {"0", "1/9", "1/3", "1"},
         {10, 4},
         {"O(-2) -> O^10 -> E_{2/9}", "E_{2/9} -> T(-1)^4 -> T^v(2)"}},
        {"E_{5/17}", "2/9", 2, "5/17",
         {"17", "5", "-7/2", "5/6"}, 20,
         {"-2", "0", "2/9", "1/3"},
         {6, 20},
         {"E_{5/17} -> T(-1)^6 -> O(1)", "T(1) -> O(4)^20 -> E_{5/17}"}},
        {"E_{4/11}", "4/9", 2, "4/11",
         {"11", "4", "-2", "2/3"}, 15,
         {"1/3", "4/9", "1", "2"},
         {4, 20},
         {"O -> T(-1)^4 -> E_{4/11}", "E_{4/11} -> O(1)^20 -> E_{7/9}(1)"}},
        {"E_{7/11}", "5/9", 2, "7/11",
         {"11", "7", "15/2", "-17/6"}, 20,
         {"-1", "0", "5/9", "2/3"},
         {4, 20},
         {"E_{7/11} -> T^v(2)^4 -> O(1)", "E_{2/9}(-1) -> O^20 -> E_{7/11}"}},
        {"E_{12/17}", "7/9", 2, "12/17",
         {"17", "12", "12", "-4"}, 35,
         {"2/3", "7/9", "1", "3"},
         {6, 20},
         {"O -> T^v(2)^6 -> E_{12/17}", "E_{12/17} -> O(1)^20 -> T^v(4)"}},
        {"E_{7/9}", "8/9", 2, "7/9",
         {"9", "7", "1/2", "-17/6"}, 20,
         {"0", "2/3", "8/9", "1"},
         {10, 4},
         {"E_{7/9} -> O(1)^10 -> O(3)", "T(-1) -> T^v(2)^4 -> E_{7/9}"}},
        {"E_{3/19}", "1/27", 3, "3/19",
         {"19", "3", "-9/2", "9/2"}, 20,
         {"0", "1/27", "1/9", "1/3"},
         {20, 4},
         {"O(-3) -> O^20 -> E_{3/19}", "E_{3/19} -> E_{2/9}^4 -> E_{5/17}"}},
        {"E_{7/33}", "2/27", 3, "7/33",
         {"33", "7", "-15/2", "31/6"}, 36,
         {"0", "2/27", "1/9", "1"},
         {4, 36},
         {"E_{7/33} -> E_{2/9}^4 -> T(-1)", "T^v(3) -> O(4)^36 -> E_{7/33}"}},
        {"E_{20/89}", "4/27", 3, "20/89",
         {"89", "20", "-20", "40/3"}, 99,
         {"1/9", "4/27", "1/3", "1"},
         {10, 36},
         {"O -> E_{2/9}^10 -> E_{20/89}", "E_{20/89} -> T(-1)^36 -> E_{3/19}^v"}},
        {"E_{29/99}", "5/27", 3, "29/99",
         {"99", "29", "-41/2", "29/6"}, 116,
         {"-2", "0", "5/27", "2/9"},
         {6, 116},
         {"E_{29/99} -> E_{5/17}^6 -> T(-1)", "E_{5/17}(2) -> O(4)^116 -> E_{29/99}"}},
        {"E_{100/339}", "7/27", 3, "100/339",
         {"339", "100", "-70", "50/3"}, 399,
         {"2/9", "7/27", "1/3", "2"},
         {20, 116},
         {"O -> E_{5/17}^20 -> E_{100/339}", "E_{100/339} -> T(-1)^116 -> E_{7/9}(1)"}},
        {"E_{18/59}", "8/27", 3, "18/59",
         {"59", "18", "8", "2"}, 70,
         {"0", "2/9", "8/27", "1/3"},
         {20, 4},
         {"E_{18/59} -> T(-1)^20 -> O(2)", "E_{2/9} -> E_{5/17}^4 -> E_{18/59}"}},
        {"E_{38/107}", "10/27", 3, "38/107",
         {"107", "38", "-20", "22/3"}, 144,
         {"1/3", "10/27", "4/9", "1"},
         {36, 10},
         {"O(-2) -> T(-1)^36 -> E_{38/107}", "E_{38/107} -> E_{4/11}^10 -> T^v(2)"}},
        {"E_{79/219}", "11/27", 3, "79/219",
         {"219", "79", "-81/2", "79/6"}, 296,
         {"-2", "1/3", "11/27", "4/9"},
         {20, 74},
         {"E_{79/219} -> E_{4/11}^20 -> O(1)", "T(-3) -> T(-1)^74 -> E_{79/219}"}},
        {"E_{15/41}", "13/27", 3, "15/41",
         {"41", "15", "-15/2", "15/6"}, 56,
         {"4/9", "13/27", "1", "2"},
         {4, 74},
         {"T(-1) -> E_{4/11}^4 -> E_{15/41}", "E_{15/41} -> O(1)^74 -> E_{7/33}^v(2)"}},
        {"E_{26/41}", "14/27", 3, "26/41",
         {"41", "26", "28", "-32/3"}, 74,
         {"-1", "0", "14/27", "5/9"},
         {4, 74},
         {"E_{26/41} -> E_{7/11}^4 -> T^v(2)", "E_{7/33}(-1) -> O^74 -> E_{26/41}"}},
        {"E_{140/219}", "16/27", 3, "140/219",
         {"219", "140", "150", "-170/3"}, 399,
         {"5/9", "16/27", "2/3", "3"},
         {20, 0},
         {"O -> E_{7/11}^20 -> E_{140/219}", "E_{140/219} -> T^v(2) -> T^v(4)"}},
        {"E_{69/107}", "17/27", 3, "69/107",
         {"107", "69", "135/2", "-57/2"}, 196,
         {"0", "5/9", "17/27", "2/3"},
         {36, 10},
         {"E_{69/107} -> T^v(2)^36 -> O(3)", "T(-1) -> E_{7/11}^10 -> E_{69/107}"}},
    };
    return rows;
}

}  // namespace helix
