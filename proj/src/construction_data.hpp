#pragma once
// Embedded copies of the construction data files. Tests assert these match
// the files under data/ byte for byte.

namespace ptn::data {

inline constexpr const char* kTheta4G0 = R"rotdata(0: 1 3 4 5
1: 2 0 5 6
2: 3 1 6 7
3: 0 2 7 4
4: 0 3 11 8
5: 0 8 9 1
6: 1 9 10 2
7: 2 10 11 3
8: 5 4 11 9
9: 6 5 8 10
10: 7 6 9 11
11: 8 4 7 10
# outer: 8 9 10 11
)rotdata";
inline constexpr const char* kTheta4Gadget = R"rotdata(0: 4 1 3 8
1: 0 9 5 2
2: 1 10 6 3
3: 2 11 7 0
4: 9 0 8 12
5: 10 1 9 13
6: 11 2 10 14
7: 8 3 11 15
8: 4 0 7 15
9: 1 4 12 5
10: 2 5 13 6
11: 3 6 14 7
12: 9 4 15 19 16 13
13: 12 16 17 14 10 5
14: 13 17 18 15 11 6
15: 12 8 7 14 18 19
16: 13 12 20 21
17: 14 13 21 22
18: 15 14 22 23
19: 20 12 15 23
20: 16 19 23 21
21: 16 20 22 17
22: 17 21 23 18
23: 18 22 20 19
# inner: 3 2 1 0
# outer: 20 21 22 23
)rotdata";
inline constexpr const char* kTheta5G0 = R"rotdata(0: 20 22 21
1: 24 20 23
2: 26 23 25
3: 28 25 27
4: 29 27 21
5: 22 30 31
6: 32 24 33
7: 34 26 35
8: 36 28 37
9: 38 29 39
10: 30 32 40
11: 41 33 34
12: 42 35 36
13: 43 37 38
14: 44 39 31
15: 40 45 46
16: 45 41 47
17: 47 42 48
18: 48 43 49
19: 49 44 46
20: 22 0 21 23 1 24
21: 20 0 22 29 4 27
22: 0 20 30 5 31 21
23: 24 1 20 25 2 26
24: 20 1 23 33 6 32
25: 26 2 23 27 3 28
26: 23 2 25 35 7 34
27: 28 3 25 21 4 29
28: 25 3 27 37 8 36
29: 27 4 21 39 9 38
30: 5 22 32 10 40 31
31: 22 5 30 44 14 39
32: 24 6 33 40 10 30
33: 32 6 24 34 11 41
34: 26 7 35 41 11 33
35: 34 7 26 36 12 42
36: 28 8 37 42 12 35
37: 36 8 28 38 13 43
38: 29 9 39 43 13 37
39: 38 9 29 31 14 44
40: 30 10 32 45 15 46
41: 33 11 34 47 16 45
42: 35 12 36 48 17 47
43: 37 13 38 49 18 48
44: 39 14 31 46 19 49
45: 15 40 41 16 47 46
46: 40 15 45 49 19 44
47: 45 16 41 42 17 48
48: 47 17 42 43 18 49
49: 48 18 43 44 19 46
# outer: 21 20 23 25 27
)rotdata";
inline constexpr const char* kTheta5Gadget = R"rotdata(0: 61 5 60 4 1
1: 6 62 0 2 63
2: 7 64 1 3 65
3: 8 66 2 4 67
4: 9 68 3 0 69
5: 0 61 60
6: 62 1 63
7: 64 2 65
8: 66 3 67
9: 68 4 69
10: 60 71 70
11: 72 62 73
12: 74 64 75
13: 76 66 77
14: 78 68 79
15: 61 72 80
16: 63 74 81
17: 65 76 82
18: 67 78 83
19: 69 70 84
20: 71 85 86
21: 88 73 87
22: 90 75 89
23: 92 77 91
24: 94 79 93
25: 85 80 95
26: 87 81 96
27: 89 82 97
28: 91 83 98
29: 93 84 99
30: 95 88 35
31: 96 90 36
32: 97 92 37
33: 98 94 38
34: 86 39 99
35: 95 30 88 36 41 101 100 40 39
36: 96 31 90 37 42 102 101 41 35
37: 97 32 92 38 43 103 102 42 36
38: 98 33 94 39 44 104 103 43 37
39: 34 86 35 40 100 104 44 38 99
40: 39 35 100
41: 101 35 36
42: 102 36 37
43: 103 37 38
44: 104 38 39
45: 100 106 105
46: 107 101 108
47: 109 102 110
48: 111 103 112
49: 114 104 113
50: 105 115 113
51: 106 107 116
52: 108 109 117
53: 110 111 118
54: 112 114 119
55: 115 120 121
56: 120 116 122
57: 122 117 123
58: 123 118 124
59: 124 119 121
60: 0 5 61 71 10 70
61: 5 0 72 15 80 60
62: 1 6 63 73 11 72
63: 62 6 1 74 16 81
64: 2 7 65 75 12 74
65: 64 7 2 76 17 82
66: 3 8 67 77 13 76
67: 66 8 3 78 18 83
68: 4 9 69 79 14 78
69: 68 9 4 70 19 84
70: 60 10 71 84 19 69
71: 10 60 85 20 86 70
72: 62 11 73 80 15 61
73: 72 11 62 87 21 88
74: 64 12 75 81 16 63
75: 74 12 64 89 22 90
76: 66 13 77 82 17 65
77: 76 13 66 91 23 92
78: 68 14 79 83 18 67
79: 78 14 68 93 24 94
80: 61 15 72 95 25 85
81: 63 16 74 96 26 87
82: 65 17 76 97 27 89
83: 67 18 78 98 28 91
84: 69 19 70 99 29 93
85: 20 71 80 25 95 86
86: 71 20 85 39 34 99
87: 88 21 73 81 26 96
88: 73 21 87 35 30 95
89: 90 22 75 82 27 97
90: 75 22 89 36 31 96
91: 92 23 77 83 28 98
92: 77 23 91 37 32 97
93: 94 24 79 84 29 99
94: 79 24 93 38 33 98
95: 85 25 80 88 30 35
96: 87 26 81 90 31 36
97: 89 27 82 92 32 37
98: 91 28 83 94 33 38
99: 93 29 84 86 34 39
100: 39 40 35 106 45 105
101: 35 41 36 108 46 107
102: 36 42 37 110 47 109
103: 37 43 38 112 48 111
104: 38 44 39 113 49 114
105: 100 45 106 115 50 113
106: 45 100 107 51 116 105
107: 101 46 108 116 51 106
108: 107 46 101 109 52 117
109: 102 47 110 117 52 108
110: 109 47 102 111 53 118
111: 103 48 112 118 53 110
112: 111 48 103 114 54 119
113: 114 49 104 105 50 115
114: 104 49 113 119 54 112
115: 50 105 120 55 121 113
116: 106 51 107 122 56 120
117: 108 52 109 123 57 122
118: 110 53 111 124 58 123
119: 112 54 114 121 59 124
120: 55 115 116 56 122 121
121: 115 55 120 124 59 119
122: 120 56 116 117 57 123
123: 122 57 117 118 58 124
124: 123 58 118 119 59 121
# inner: 0 1 2 3 4
# outer: 121 124 123 122 120
)rotdata";

}  // namespace ptn::data
