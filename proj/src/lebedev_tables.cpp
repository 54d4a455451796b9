// Generated by tools/gen_lebedev.py. Do not edit.
#include "lebedev_tables.hpp"

namespace mcboltz::detail {

namespace {
constexpr double lebedev_6[6][4] = {
    {1, 0, 0, 2.0943951023931953},
    {-1, 0, 0, 2.0943951023931953},
    {0, 1, 0, 2.0943951023931953},
    {0, -1, 0, 2.0943951023931953},
    {0, 0, 1, 2.0943951023931953},
    {0, 0, -1, 2.0943951023931953},
};
constexpr double lebedev_14[14][4] = {
    {1, 0, 0, 0.83775804095727813},
    {-1, 0, 0, 0.83775804095727813},
    {0, 1, 0, 0.83775804095727813},
    {0, -1, 0, 0.83775804095727813},
    {0, 0, 1, 0.83775804095727813},
    {0, 0, -1, 0.83775804095727813},
    {0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.94247779607693793},
    {-0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.94247779607693793},
    {0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.94247779607693793},
    {0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.94247779607693793},
    {-0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.94247779607693793},
    {0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.94247779607693793},
    {-0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.94247779607693793},
    {-0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.94247779607693793},
};
constexpr double lebedev_26[26][4] = {
    {1, 0, 0, 0.59839860068377015},
    {-1, 0, 0, 0.59839860068377015},
    {0, 1, 0, 0.59839860068377015},
    {0, -1, 0, 0.59839860068377015},
    {0, 0, 1, 0.59839860068377015},
    {0, 0, -1, 0.59839860068377015},
    {0, 0.70710678118654757, 0.70710678118654757, 0.47871888054701611},
    {0, -0.70710678118654757, 0.70710678118654757, 0.47871888054701611},
    {0, 0.70710678118654757, -0.70710678118654757, 0.47871888054701611},
    {0, -0.70710678118654757, -0.70710678118654757, 0.47871888054701611},
    {0.70710678118654757, 0, 0.70710678118654757, 0.47871888054701611},
    {0.70710678118654757, 0, -0.70710678118654757, 0.47871888054701611},
    {-0.70710678118654757, 0, 0.70710678118654757, 0.47871888054701611},
    {-0.70710678118654757, 0, -0.70710678118654757, 0.47871888054701611},
    {0.70710678118654757, 0.70710678118654757, 0, 0.47871888054701611},
    {-0.70710678118654757, 0.70710678118654757, 0, 0.47871888054701611},
    {0.70710678118654757, -0.70710678118654757, 0, 0.47871888054701611},
    {-0.70710678118654757, -0.70710678118654757, 0, 0.47871888054701611},
    {0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.40391905546154477},
    {-0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.40391905546154477},
    {0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.40391905546154477},
    {0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.40391905546154477},
    {-0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.40391905546154477},
    {0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.40391905546154477},
    {-0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.40391905546154477},
    {-0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.40391905546154477},
};
constexpr double lebedev_38[38][4] = {
    {1, 0, 0, 0.11967972013675403},
    {-1, 0, 0, 0.11967972013675403},
    {0, 1, 0, 0.11967972013675403},
    {0, -1, 0, 0.11967972013675403},
    {0, 0, 1, 0.11967972013675403},
    {0, 0, -1, 0.11967972013675403},
    {0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.40391905546154477},
    {-0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.40391905546154477},
    {0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.40391905546154477},
    {0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.40391905546154477},
    {-0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.40391905546154477},
    {0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.40391905546154477},
    {-0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.40391905546154477},
    {-0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.40391905546154477},
    {0.4597008433809831, 0.88807383397711526, 0, 0.35903916041026207},
    {-0.4597008433809831, 0.88807383397711526, 0, 0.35903916041026207},
    {0.4597008433809831, -0.88807383397711526, 0, 0.35903916041026207},
    {-0.4597008433809831, -0.88807383397711526, 0, 0.35903916041026207},
    {0.88807383397711526, 0.4597008433809831, 0, 0.35903916041026207},
    {-0.88807383397711526, 0.4597008433809831, 0, 0.35903916041026207},
    {0.88807383397711526, -0.4597008433809831, 0, 0.35903916041026207},
    {-0.88807383397711526, -0.4597008433809831, 0, 0.35903916041026207},
    {0.4597008433809831, 0, 0.88807383397711526, 0.35903916041026207},
    {-0.4597008433809831, 0, 0.88807383397711526, 0.35903916041026207},
    {0.4597008433809831, 0, -0.88807383397711526, 0.35903916041026207},
    {-0.4597008433809831, 0, -0.88807383397711526, 0.35903916041026207},
    {0.88807383397711526, 0, 0.4597008433809831, 0.35903916041026207},
    {-0.88807383397711526, 0, 0.4597008433809831, 0.35903916041026207},
    {0.88807383397711526, 0, -0.4597008433809831, 0.35903916041026207},
    {-0.88807383397711526, 0, -0.4597008433809831, 0.35903916041026207},
    {0, 0.4597008433809831, 0.88807383397711526, 0.35903916041026207},
    {0, -0.4597008433809831, 0.88807383397711526, 0.35903916041026207},
    {0, 0.4597008433809831, -0.88807383397711526, 0.35903916041026207},
    {0, -0.4597008433809831, -0.88807383397711526, 0.35903916041026207},
    {0, 0.88807383397711526, 0.4597008433809831, 0.35903916041026207},
    {0, -0.88807383397711526, 0.4597008433809831, 0.35903916041026207},
    {0, 0.88807383397711526, -0.4597008433809831, 0.35903916041026207},
    {0, -0.88807383397711526, -0.4597008433809831, 0.35903916041026207},
};
constexpr double lebedev_50[50][4] = {
    {1, 0, 0, 0.15957296018233871},
    {-1, 0, 0, 0.15957296018233871},
    {0, 1, 0, 0.15957296018233871},
    {0, -1, 0, 0.15957296018233871},
    {0, 0, 1, 0.15957296018233871},
    {0, 0, -1, 0.15957296018233871},
    {0, 0.70710678118654757, 0.70710678118654757, 0.28368526254637988},
    {0, -0.70710678118654757, 0.70710678118654757, 0.28368526254637988},
    {0, 0.70710678118654757, -0.70710678118654757, 0.28368526254637988},
    {0, -0.70710678118654757, -0.70710678118654757, 0.28368526254637988},
    {0.70710678118654757, 0, 0.70710678118654757, 0.28368526254637988},
    {0.70710678118654757, 0, -0.70710678118654757, 0.28368526254637988},
    {-0.70710678118654757, 0, 0.70710678118654757, 0.28368526254637988},
    {-0.70710678118654757, 0, -0.70710678118654757, 0.28368526254637988},
    {0.70710678118654757, 0.70710678118654757, 0, 0.28368526254637988},
    {-0.70710678118654757, 0.70710678118654757, 0, 0.28368526254637988},
    {0.70710678118654757, -0.70710678118654757, 0, 0.28368526254637988},
    {-0.70710678118654757, -0.70710678118654757, 0, 0.28368526254637988},
    {0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.26507188014663879},
    {-0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.26507188014663879},
    {0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.26507188014663879},
    {0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.26507188014663879},
    {-0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.26507188014663879},
    {0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.26507188014663879},
    {-0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.26507188014663879},
    {-0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.26507188014663879},
    {0.30151134457776357, 0.30151134457776357, 0.90453403373329089, 0.25350561089731127},
    {-0.30151134457776357, 0.30151134457776357, 0.90453403373329089, 0.25350561089731127},
    {0.30151134457776357, -0.30151134457776357, 0.90453403373329089, 0.25350561089731127},
    {0.30151134457776357, 0.30151134457776357, -0.90453403373329089, 0.25350561089731127},
    {-0.30151134457776357, -0.30151134457776357, 0.90453403373329089, 0.25350561089731127},
    {-0.30151134457776357, 0.30151134457776357, -0.90453403373329089, 0.25350561089731127},
    {0.30151134457776357, -0.30151134457776357, -0.90453403373329089, 0.25350561089731127},
    {-0.30151134457776357, -0.30151134457776357, -0.90453403373329089, 0.25350561089731127},
    {-0.30151134457776357, 0.90453403373329089, 0.30151134457776357, 0.25350561089731127},
    {0.30151134457776357, -0.90453403373329089, 0.30151134457776357, 0.25350561089731127},
    {0.30151134457776357, 0.90453403373329089, -0.30151134457776357, 0.25350561089731127},
    {-0.30151134457776357, -0.90453403373329089, 0.30151134457776357, 0.25350561089731127},
    {-0.30151134457776357, 0.90453403373329089, -0.30151134457776357, 0.25350561089731127},
    {0.30151134457776357, -0.90453403373329089, -0.30151134457776357, 0.25350561089731127},
    {-0.30151134457776357, -0.90453403373329089, -0.30151134457776357, 0.25350561089731127},
    {0.30151134457776357, 0.90453403373329089, 0.30151134457776357, 0.25350561089731127},
    {0.90453403373329089, 0.30151134457776357, 0.30151134457776357, 0.25350561089731127},
    {-0.90453403373329089, 0.30151134457776357, 0.30151134457776357, 0.25350561089731127},
    {0.90453403373329089, -0.30151134457776357, 0.30151134457776357, 0.25350561089731127},
    {0.90453403373329089, 0.30151134457776357, -0.30151134457776357, 0.25350561089731127},
    {-0.90453403373329089, -0.30151134457776357, 0.30151134457776357, 0.25350561089731127},
    {-0.90453403373329089, 0.30151134457776357, -0.30151134457776357, 0.25350561089731127},
    {0.90453403373329089, -0.30151134457776357, -0.30151134457776357, 0.25350561089731127},
    {-0.90453403373329089, -0.30151134457776357, -0.30151134457776357, 0.25350561089731127},
};
constexpr double lebedev_74[74][4] = {
    {1, 0, 0, 0.0064473923305995431},
    {-1, 0, 0, 0.0064473923305995431},
    {0, 1, 0, 0.0064473923305995431},
    {0, -1, 0, 0.0064473923305995431},
    {0, 0, 1, 0.0064473923305995431},
    {0, 0, -1, 0.0064473923305995431},
    {0, 0.70710678118654757, 0.70710678118654757, 0.20865289186971622},
    {0, -0.70710678118654757, 0.70710678118654757, 0.20865289186971622},
    {0, 0.70710678118654757, -0.70710678118654757, 0.20865289186971622},
    {0, -0.70710678118654757, -0.70710678118654757, 0.20865289186971622},
    {0.70710678118654757, 0, 0.70710678118654757, 0.20865289186971622},
    {0.70710678118654757, 0, -0.70710678118654757, 0.20865289186971622},
    {-0.70710678118654757, 0, 0.70710678118654757, 0.20865289186971622},
    {-0.70710678118654757, 0, -0.70710678118654757, 0.20865289186971622},
    {0.70710678118654757, 0.70710678118654757, 0, 0.20865289186971622},
    {-0.70710678118654757, 0.70710678118654757, 0, 0.20865289186971622},
    {0.70710678118654757, -0.70710678118654757, 0, 0.20865289186971622},
    {-0.70710678118654757, -0.70710678118654757, 0, 0.20865289186971622},
    {0.57735026918962573, 0.57735026918962573, 0.57735026918962573, -0.37178913059528557},
    {-0.57735026918962573, 0.57735026918962573, 0.57735026918962573, -0.37178913059528557},
    {0.57735026918962573, -0.57735026918962573, 0.57735026918962573, -0.37178913059528557},
    {0.57735026918962573, 0.57735026918962573, -0.57735026918962573, -0.37178913059528557},
    {-0.57735026918962573, -0.57735026918962573, 0.57735026918962573, -0.37178913059528557},
    {0.57735026918962573, -0.57735026918962573, -0.57735026918962573, -0.37178913059528557},
    {-0.57735026918962573, 0.57735026918962573, -0.57735026918962573, -0.37178913059528557},
    {-0.57735026918962573, -0.57735026918962573, -0.57735026918962573, -0.37178913059528557},
    {0.48038446141526142, 0.48038446141526142, 0.73379938570534275, 0.33396646771837279},
    {-0.48038446141526142, 0.48038446141526142, 0.73379938570534275, 0.33396646771837279},
    {0.48038446141526142, -0.48038446141526142, 0.73379938570534275, 0.33396646771837279},
    {0.48038446141526142, 0.48038446141526142, -0.73379938570534275, 0.33396646771837279},
    {-0.48038446141526142, -0.48038446141526142, 0.73379938570534275, 0.33396646771837279},
    {-0.48038446141526142, 0.48038446141526142, -0.73379938570534275, 0.33396646771837279},
    {0.48038446141526142, -0.48038446141526142, -0.73379938570534275, 0.33396646771837279},
    {-0.48038446141526142, -0.48038446141526142, -0.73379938570534275, 0.33396646771837279},
    {-0.48038446141526142, 0.73379938570534275, 0.48038446141526142, 0.33396646771837279},
    {0.48038446141526142, -0.73379938570534275, 0.48038446141526142, 0.33396646771837279},
    {0.48038446141526142, 0.73379938570534275, -0.48038446141526142, 0.33396646771837279},
    {-0.48038446141526142, -0.73379938570534275, 0.48038446141526142, 0.33396646771837279},
    {-0.48038446141526142, 0.73379938570534275, -0.48038446141526142, 0.33396646771837279},
    {0.48038446141526142, -0.73379938570534275, -0.48038446141526142, 0.33396646771837279},
    {-0.48038446141526142, -0.73379938570534275, -0.48038446141526142, 0.33396646771837279},
    {0.48038446141526142, 0.73379938570534275, 0.48038446141526142, 0.33396646771837279},
    {0.73379938570534275, 0.48038446141526142, 0.48038446141526142, 0.33396646771837279},
    {-0.73379938570534275, 0.48038446141526142, 0.48038446141526142, 0.33396646771837279},
    {0.73379938570534275, -0.48038446141526142, 0.48038446141526142, 0.33396646771837279},
    {0.73379938570534275, 0.48038446141526142, -0.48038446141526142, 0.33396646771837279},
    {-0.73379938570534275, -0.48038446141526142, 0.48038446141526142, 0.33396646771837279},
    {-0.73379938570534275, 0.48038446141526142, -0.48038446141526142, 0.33396646771837279},
    {0.73379938570534275, -0.48038446141526142, -0.48038446141526142, 0.33396646771837279},
    {-0.73379938570534275, -0.48038446141526142, -0.48038446141526142, 0.33396646771837279},
    {0.3207726489807764, 0.94715622136258792, 0, 0.20762372406084659},
    {-0.3207726489807764, 0.94715622136258792, 0, 0.20762372406084659},
    {0.3207726489807764, -0.94715622136258792, 0, 0.20762372406084659},
    {-0.3207726489807764, -0.94715622136258792, 0, 0.20762372406084659},
    {0.94715622136258792, 0.3207726489807764, 0, 0.20762372406084659},
    {-0.94715622136258792, 0.3207726489807764, 0, 0.20762372406084659},
    {0.94715622136258792, -0.3207726489807764, 0, 0.20762372406084659},
    {-0.94715622136258792, -0.3207726489807764, 0, 0.20762372406084659},
    {0.3207726489807764, 0, 0.94715622136258792, 0.20762372406084659},
    {-0.3207726489807764, 0, 0.94715622136258792, 0.20762372406084659},
    {0.3207726489807764, 0, -0.94715622136258792, 0.20762372406084659},
    {-0.3207726489807764, 0, -0.94715622136258792, 0.20762372406084659},
    {0.94715622136258792, 0, 0.3207726489807764, 0.20762372406084659},
    {-0.94715622136258792, 0, 0.3207726489807764, 0.20762372406084659},
    {0.94715622136258792, 0, -0.3207726489807764, 0.20762372406084659},
    {-0.94715622136258792, 0, -0.3207726489807764, 0.20762372406084659},
    {0, 0.3207726489807764, 0.94715622136258792, 0.20762372406084659},
    {0, -0.3207726489807764, 0.94715622136258792, 0.20762372406084659},
    {0, 0.3207726489807764, -0.94715622136258792, 0.20762372406084659},
    {0, -0.3207726489807764, -0.94715622136258792, 0.20762372406084659},
    {0, 0.94715622136258792, 0.3207726489807764, 0.20762372406084659},
    {0, -0.94715622136258792, 0.3207726489807764, 0.20762372406084659},
    {0, 0.94715622136258792, -0.3207726489807764, 0.20762372406084659},
    {0, -0.94715622136258792, -0.3207726489807764, 0.20762372406084659},
};
constexpr double lebedev_86[86][4] = {
    {1, 0, 0, 0.14506632743848966},
    {-1, 0, 0, 0.14506632743848966},
    {0, 1, 0, 0.14506632743848966},
    {0, -1, 0, 0.14506632743848966},
    {0, 0, 1, 0.14506632743848966},
    {0, 0, -1, 0.14506632743848966},
    {0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.15009158815708185},
    {-0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.15009158815708185},
    {0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.15009158815708185},
    {0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.15009158815708185},
    {-0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.15009158815708185},
    {0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.15009158815708185},
    {-0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.15009158815708185},
    {-0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.15009158815708185},
    {0.3696028464541502, 0.3696028464541502, 0.85251831170126757, 0.13961936079092704},
    {-0.3696028464541502, 0.3696028464541502, 0.85251831170126757, 0.13961936079092704},
    {0.3696028464541502, -0.3696028464541502, 0.85251831170126757, 0.13961936079092704},
    {0.3696028464541502, 0.3696028464541502, -0.85251831170126757, 0.13961936079092704},
    {-0.3696028464541502, -0.3696028464541502, 0.85251831170126757, 0.13961936079092704},
    {-0.3696028464541502, 0.3696028464541502, -0.85251831170126757, 0.13961936079092704},
    {0.3696028464541502, -0.3696028464541502, -0.85251831170126757, 0.13961936079092704},
    {-0.3696028464541502, -0.3696028464541502, -0.85251831170126757, 0.13961936079092704},
    {-0.3696028464541502, 0.85251831170126757, 0.3696028464541502, 0.13961936079092704},
    {0.3696028464541502, -0.85251831170126757, 0.3696028464541502, 0.13961936079092704},
    {0.3696028464541502, 0.85251831170126757, -0.3696028464541502, 0.13961936079092704},
    {-0.3696028464541502, -0.85251831170126757, 0.3696028464541502, 0.13961936079092704},
    {-0.3696028464541502, 0.85251831170126757, -0.3696028464541502, 0.13961936079092704},
    {0.3696028464541502, -0.85251831170126757, -0.3696028464541502, 0.13961936079092704},
    {-0.3696028464541502, -0.85251831170126757, -0.3696028464541502, 0.13961936079092704},
    {0.3696028464541502, 0.85251831170126757, 0.3696028464541502, 0.13961936079092704},
    {0.85251831170126757, 0.3696028464541502, 0.3696028464541502, 0.13961936079092704},
    {-0.85251831170126757, 0.3696028464541502, 0.3696028464541502, 0.13961936079092704},
    {0.85251831170126757, -0.3696028464541502, 0.3696028464541502, 0.13961936079092704},
    {0.85251831170126757, 0.3696028464541502, -0.3696028464541502, 0.13961936079092704},
    {-0.85251831170126757, -0.3696028464541502, 0.3696028464541502, 0.13961936079092704},
    {-0.85251831170126757, 0.3696028464541502, -0.3696028464541502, 0.13961936079092704},
    {0.85251831170126757, -0.3696028464541502, -0.3696028464541502, 0.13961936079092704},
    {-0.85251831170126757, -0.3696028464541502, -0.3696028464541502, 0.13961936079092704},
    {0.69435400660266644, 0.69435400660266644, 0.18906355288539498, 0.14924451686907017},
    {-0.69435400660266644, 0.69435400660266644, 0.18906355288539498, 0.14924451686907017},
    {0.69435400660266644, -0.69435400660266644, 0.18906355288539498, 0.14924451686907017},
    {0.69435400660266644, 0.69435400660266644, -0.18906355288539498, 0.14924451686907017},
    {-0.69435400660266644, -0.69435400660266644, 0.18906355288539498, 0.14924451686907017},
    {-0.69435400660266644, 0.69435400660266644, -0.18906355288539498, 0.14924451686907017},
    {0.69435400660266644, -0.69435400660266644, -0.18906355288539498, 0.14924451686907017},
    {-0.69435400660266644, -0.69435400660266644, -0.18906355288539498, 0.14924451686907017},
    {-0.69435400660266644, 0.18906355288539498, 0.69435400660266644, 0.14924451686907017},
    {0.69435400660266644, -0.18906355288539498, 0.69435400660266644, 0.14924451686907017},
    {0.69435400660266644, 0.18906355288539498, -0.69435400660266644, 0.14924451686907017},
    {-0.69435400660266644, -0.18906355288539498, 0.69435400660266644, 0.14924451686907017},
    {-0.69435400660266644, 0.18906355288539498, -0.69435400660266644, 0.14924451686907017},
    {0.69435400660266644, -0.18906355288539498, -0.69435400660266644, 0.14924451686907017},
    {-0.69435400660266644, -0.18906355288539498, -0.69435400660266644, 0.14924451686907017},
    {0.69435400660266644, 0.18906355288539498, 0.69435400660266644, 0.14924451686907017},
    {0.18906355288539498, 0.69435400660266644, 0.69435400660266644, 0.14924451686907017},
    {-0.18906355288539498, 0.69435400660266644, 0.69435400660266644, 0.14924451686907017},
    {0.18906355288539498, -0.69435400660266644, 0.69435400660266644, 0.14924451686907017},
    {0.18906355288539498, 0.69435400660266644, -0.69435400660266644, 0.14924451686907017},
    {-0.18906355288539498, -0.69435400660266644, 0.69435400660266644, 0.14924451686907017},
    {-0.18906355288539498, 0.69435400660266644, -0.69435400660266644, 0.14924451686907017},
    {0.18906355288539498, -0.69435400660266644, -0.69435400660266644, 0.14924451686907017},
    {-0.18906355288539498, -0.69435400660266644, -0.69435400660266644, 0.14924451686907017},
    {0.37424303909034118, 0.92733065715117247, 0, 0.14843778669298519},
    {-0.37424303909034118, 0.92733065715117247, 0, 0.14843778669298519},
    {0.37424303909034118, -0.92733065715117247, 0, 0.14843778669298519},
    {-0.37424303909034118, -0.92733065715117247, 0, 0.14843778669298519},
    {0.92733065715117247, 0.37424303909034118, 0, 0.14843778669298519},
    {-0.92733065715117247, 0.37424303909034118, 0, 0.14843778669298519},
    {0.92733065715117247, -0.37424303909034118, 0, 0.14843778669298519},
    {-0.92733065715117247, -0.37424303909034118, 0, 0.14843778669298519},
    {0.37424303909034118, 0, 0.92733065715117247, 0.14843778669298519},
    {-0.37424303909034118, 0, 0.92733065715117247, 0.14843778669298519},
    {0.37424303909034118, 0, -0.92733065715117247, 0.14843778669298519},
    {-0.37424303909034118, 0, -0.92733065715117247, 0.14843778669298519},
    {0.92733065715117247, 0, 0.37424303909034118, 0.14843778669298519},
    {-0.92733065715117247, 0, 0.37424303909034118, 0.14843778669298519},
    {0.92733065715117247, 0, -0.37424303909034118, 0.14843778669298519},
    {-0.92733065715117247, 0, -0.37424303909034118, 0.14843778669298519},
    {0, 0.37424303909034118, 0.92733065715117247, 0.14843778669298519},
    {0, -0.37424303909034118, 0.92733065715117247, 0.14843778669298519},
    {0, 0.37424303909034118, -0.92733065715117247, 0.14843778669298519},
    {0, -0.37424303909034118, -0.92733065715117247, 0.14843778669298519},
    {0, 0.92733065715117247, 0.37424303909034118, 0.14843778669298519},
    {0, -0.92733065715117247, 0.37424303909034118, 0.14843778669298519},
    {0, 0.92733065715117247, -0.37424303909034118, 0.14843778669298519},
    {0, -0.92733065715117247, -0.37424303909034118, 0.14843778669298519},
};
constexpr double lebedev_110[110][4] = {
    {1, 0, 0, 0.048107465851396587},
    {-1, 0, 0, 0.048107465851396587},
    {0, 1, 0, 0.048107465851396587},
    {0, -1, 0, 0.048107465851396587},
    {0, 0, 1, 0.048107465851396587},
    {0, 0, -1, 0.048107465851396587},
    {0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.12307173528167016},
    {-0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.12307173528167016},
    {0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.12307173528167016},
    {0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.12307173528167016},
    {-0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.12307173528167016},
    {0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.12307173528167016},
    {-0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.12307173528167016},
    {-0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.12307173528167016},
    {0.18511563534473621, 0.18511563534473621, 0.96512403508659406, 0.10319173408833039},
    {-0.18511563534473621, 0.18511563534473621, 0.96512403508659406, 0.10319173408833039},
    {0.18511563534473621, -0.18511563534473621, 0.96512403508659406, 0.10319173408833039},
    {0.18511563534473621, 0.18511563534473621, -0.96512403508659406, 0.10319173408833039},
    {-0.18511563534473621, -0.18511563534473621, 0.96512403508659406, 0.10319173408833039},
    {-0.18511563534473621, 0.18511563534473621, -0.96512403508659406, 0.10319173408833039},
    {0.18511563534473621, -0.18511563534473621, -0.96512403508659406, 0.10319173408833039},
    {-0.18511563534473621, -0.18511563534473621, -0.96512403508659406, 0.10319173408833039},
    {-0.18511563534473621, 0.96512403508659406, 0.18511563534473621, 0.10319173408833039},
    {0.18511563534473621, -0.96512403508659406, 0.18511563534473621, 0.10319173408833039},
    {0.18511563534473621, 0.96512403508659406, -0.18511563534473621, 0.10319173408833039},
    {-0.18511563534473621, -0.96512403508659406, 0.18511563534473621, 0.10319173408833039},
    {-0.18511563534473621, 0.96512403508659406, -0.18511563534473621, 0.10319173408833039},
    {0.18511563534473621, -0.96512403508659406, -0.18511563534473621, 0.10319173408833039},
    {-0.18511563534473621, -0.96512403508659406, -0.18511563534473621, 0.10319173408833039},
    {0.18511563534473621, 0.96512403508659406, 0.18511563534473621, 0.10319173408833039},
    {0.96512403508659406, 0.18511563534473621, 0.18511563534473621, 0.10319173408833039},
    {-0.96512403508659406, 0.18511563534473621, 0.18511563534473621, 0.10319173408833039},
    {0.96512403508659406, -0.18511563534473621, 0.18511563534473621, 0.10319173408833039},
    {0.96512403508659406, 0.18511563534473621, -0.18511563534473621, 0.10319173408833039},
    {-0.96512403508659406, -0.18511563534473621, 0.18511563534473621, 0.10319173408833039},
    {-0.96512403508659406, 0.18511563534473621, -0.18511563534473621, 0.10319173408833039},
    {0.96512403508659406, -0.18511563534473621, -0.18511563534473621, 0.10319173408833039},
    {-0.96512403508659406, -0.18511563534473621, -0.18511563534473621, 0.10319173408833039},
    {0.69042104838229224, 0.69042104838229224, 0.21595729184584844, 0.12494509687251329},
    {-0.69042104838229224, 0.69042104838229224, 0.21595729184584844, 0.12494509687251329},
    {0.69042104838229224, -0.69042104838229224, 0.21595729184584844, 0.12494509687251329},
    {0.69042104838229224, 0.69042104838229224, -0.21595729184584844, 0.12494509687251329},
    {-0.69042104838229224, -0.69042104838229224, 0.21595729184584844, 0.12494509687251329},
    {-0.69042104838229224, 0.69042104838229224, -0.21595729184584844, 0.12494509687251329},
    {0.69042104838229224, -0.69042104838229224, -0.21595729184584844, 0.12494509687251329},
    {-0.69042104838229224, -0.69042104838229224, -0.21595729184584844, 0.12494509687251329},
    {-0.69042104838229224, 0.21595729184584844, 0.69042104838229224, 0.12494509687251329},
    {0.69042104838229224, -0.21595729184584844, 0.69042104838229224, 0.12494509687251329},
    {0.69042104838229224, 0.21595729184584844, -0.69042104838229224, 0.12494509687251329},
    {-0.69042104838229224, -0.21595729184584844, 0.69042104838229224, 0.12494509687251329},
    {-0.69042104838229224, 0.21595729184584844, -0.69042104838229224, 0.12494509687251329},
    {0.69042104838229224, -0.21595729184584844, -0.69042104838229224, 0.12494509687251329},
    {-0.69042104838229224, -0.21595729184584844, -0.69042104838229224, 0.12494509687251329},
    {0.69042104838229224, 0.21595729184584844, 0.69042104838229224, 0.12494509687251329},
    {0.21595729184584844, 0.69042104838229224, 0.69042104838229224, 0.12494509687251329},
    {-0.21595729184584844, 0.69042104838229224, 0.69042104838229224, 0.12494509687251329},
    {0.21595729184584844, -0.69042104838229224, 0.69042104838229224, 0.12494509687251329},
    {0.21595729184584844, 0.69042104838229224, -0.69042104838229224, 0.12494509687251329},
    {-0.21595729184584844, -0.69042104838229224, 0.69042104838229224, 0.12494509687251329},
    {-0.21595729184584844, 0.69042104838229224, -0.69042104838229224, 0.12494509687251329},
    {0.21595729184584844, -0.69042104838229224, -0.69042104838229224, 0.12494509687251329},
    {-0.21595729184584844, -0.69042104838229224, -0.69042104838229224, 0.12494509687251329},
    {0.39568947305594188, 0.39568947305594188, 0.82876998125259227, 0.12058024902852787},
    {-0.39568947305594188, 0.39568947305594188, 0.82876998125259227, 0.12058024902852787},
    {0.39568947305594188, -0.39568947305594188, 0.82876998125259227, 0.12058024902852787},
    {0.39568947305594188, 0.39568947305594188, -0.82876998125259227, 0.12058024902852787},
    {-0.39568947305594188, -0.39568947305594188, 0.82876998125259227, 0.12058024902852787},
    {-0.39568947305594188, 0.39568947305594188, -0.82876998125259227, 0.12058024902852787},
    {0.39568947305594188, -0.39568947305594188, -0.82876998125259227, 0.12058024902852787},
    {-0.39568947305594188, -0.39568947305594188, -0.82876998125259227, 0.12058024902852787},
    {-0.39568947305594188, 0.82876998125259227, 0.39568947305594188, 0.12058024902852787},
    {0.39568947305594188, -0.82876998125259227, 0.39568947305594188, 0.12058024902852787},
    {0.39568947305594188, 0.82876998125259227, -0.39568947305594188, 0.12058024902852787},
    {-0.39568947305594188, -0.82876998125259227, 0.39568947305594188, 0.12058024902852787},
    {-0.39568947305594188, 0.82876998125259227, -0.39568947305594188, 0.12058024902852787},
    {0.39568947305594188, -0.82876998125259227, -0.39568947305594188, 0.12058024902852787},
    {-0.39568947305594188, -0.82876998125259227, -0.39568947305594188, 0.12058024902852787},
    {0.39568947305594188, 0.82876998125259227, 0.39568947305594188, 0.12058024902852787},
    {0.82876998125259227, 0.39568947305594188, 0.39568947305594188, 0.12058024902852787},
    {-0.82876998125259227, 0.39568947305594188, 0.39568947305594188, 0.12058024902852787},
    {0.82876998125259227, -0.39568947305594188, 0.39568947305594188, 0.12058024902852787},
    {0.82876998125259227, 0.39568947305594188, -0.39568947305594188, 0.12058024902852787},
    {-0.82876998125259227, -0.39568947305594188, 0.39568947305594188, 0.12058024902852787},
    {-0.82876998125259227, 0.39568947305594188, -0.39568947305594188, 0.12058024902852787},
    {0.82876998125259227, -0.39568947305594188, -0.39568947305594188, 0.12058024902852787},
    {-0.82876998125259227, -0.39568947305594188, -0.39568947305594188, 0.12058024902852787},
    {0.47836902881215021, 0.87815891060406615, 0, 0.12183091738552136},
    {-0.47836902881215021, 0.87815891060406615, 0, 0.12183091738552136},
    {0.47836902881215021, -0.87815891060406615, 0, 0.12183091738552136},
    {-0.47836902881215021, -0.87815891060406615, 0, 0.12183091738552136},
    {0.87815891060406615, 0.47836902881215021, 0, 0.12183091738552136},
    {-0.87815891060406615, 0.47836902881215021, 0, 0.12183091738552136},
    {0.87815891060406615, -0.47836902881215021, 0, 0.12183091738552136},
    {-0.87815891060406615, -0.47836902881215021, 0, 0.12183091738552136},
    {0.47836902881215021, 0, 0.87815891060406615, 0.12183091738552136},
    {-0.47836902881215021, 0, 0.87815891060406615, 0.12183091738552136},
    {0.47836902881215021, 0, -0.87815891060406615, 0.12183091738552136},
    {-0.47836902881215021, 0, -0.87815891060406615, 0.12183091738552136},
    {0.87815891060406615, 0, 0.47836902881215021, 0.12183091738552136},
    {-0.87815891060406615, 0, 0.47836902881215021, 0.12183091738552136},
    {0.87815891060406615, 0, -0.47836902881215021, 0.12183091738552136},
    {-0.87815891060406615, 0, -0.47836902881215021, 0.12183091738552136},
    {0, 0.47836902881215021, 0.87815891060406615, 0.12183091738552136},
    {0, -0.47836902881215021, 0.87815891060406615, 0.12183091738552136},
    {0, 0.47836902881215021, -0.87815891060406615, 0.12183091738552136},
    {0, -0.47836902881215021, -0.87815891060406615, 0.12183091738552136},
    {0, 0.87815891060406615, 0.47836902881215021, 0.12183091738552136},
    {0, -0.87815891060406615, 0.47836902881215021, 0.12183091738552136},
    {0, 0.87815891060406615, -0.47836902881215021, 0.12183091738552136},
    {0, -0.87815891060406615, -0.47836902881215021, 0.12183091738552136},
};
constexpr double lebedev_146[146][4] = {
    {1, 0, 0, 0.0075351900131171382},
    {-1, 0, 0, 0.0075351900131171382},
    {0, 1, 0, 0.0075351900131171382},
    {0, -1, 0, 0.0075351900131171382},
    {0, 0, 1, 0.0075351900131171382},
    {0, 0, -1, 0.0075351900131171382},
    {0, 0.70710678118654757, 0.70710678118654757, 0.092651847003754312},
    {0, -0.70710678118654757, 0.70710678118654757, 0.092651847003754312},
    {0, 0.70710678118654757, -0.70710678118654757, 0.092651847003754312},
    {0, -0.70710678118654757, -0.70710678118654757, 0.092651847003754312},
    {0.70710678118654757, 0, 0.70710678118654757, 0.092651847003754312},
    {0.70710678118654757, 0, -0.70710678118654757, 0.092651847003754312},
    {-0.70710678118654757, 0, 0.70710678118654757, 0.092651847003754312},
    {-0.70710678118654757, 0, -0.70710678118654757, 0.092651847003754312},
    {0.70710678118654757, 0.70710678118654757, 0, 0.092651847003754312},
    {-0.70710678118654757, 0.70710678118654757, 0, 0.092651847003754312},
    {0.70710678118654757, -0.70710678118654757, 0, 0.092651847003754312},
    {-0.70710678118654757, -0.70710678118654757, 0, 0.092651847003754312},
    {0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.090610008336105136},
    {-0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.090610008336105136},
    {0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.090610008336105136},
    {0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.090610008336105136},
    {-0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.090610008336105136},
    {0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.090610008336105136},
    {-0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.090610008336105136},
    {-0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.090610008336105136},
    {0.67644104001142635, 0.67644104001142635, 0.29129888220952682, 0.08942676055004592},
    {-0.67644104001142635, 0.67644104001142635, 0.29129888220952682, 0.08942676055004592},
    {0.67644104001142635, -0.67644104001142635, 0.29129888220952682, 0.08942676055004592},
    {0.67644104001142635, 0.67644104001142635, -0.29129888220952682, 0.08942676055004592},
    {-0.67644104001142635, -0.67644104001142635, 0.29129888220952682, 0.08942676055004592},
    {-0.67644104001142635, 0.67644104001142635, -0.29129888220952682, 0.08942676055004592},
    {0.67644104001142635, -0.67644104001142635, -0.29129888220952682, 0.08942676055004592},
    {-0.67644104001142635, -0.67644104001142635, -0.29129888220952682, 0.08942676055004592},
    {-0.67644104001142635, 0.29129888220952682, 0.67644104001142635, 0.08942676055004592},
    {0.67644104001142635, -0.29129888220952682, 0.67644104001142635, 0.08942676055004592},
    {0.67644104001142635, 0.29129888220952682, -0.67644104001142635, 0.08942676055004592},
    {-0.67644104001142635, -0.29129888220952682, 0.67644104001142635, 0.08942676055004592},
    {-0.67644104001142635, 0.29129888220952682, -0.67644104001142635, 0.08942676055004592},
    {0.67644104001142635, -0.29129888220952682, -0.67644104001142635, 0.08942676055004592},
    {-0.67644104001142635, -0.29129888220952682, -0.67644104001142635, 0.08942676055004592},
    {0.67644104001142635, 0.29129888220952682, 0.67644104001142635, 0.08942676055004592},
    {0.29129888220952682, 0.67644104001142635, 0.67644104001142635, 0.08942676055004592},
    {-0.29129888220952682, 0.67644104001142635, 0.67644104001142635, 0.08942676055004592},
    {0.29129888220952682, -0.67644104001142635, 0.67644104001142635, 0.08942676055004592},
    {0.29129888220952682, 0.67644104001142635, -0.67644104001142635, 0.08942676055004592},
    {-0.29129888220952682, -0.67644104001142635, 0.67644104001142635, 0.08942676055004592},
    {-0.29129888220952682, 0.67644104001142635, -0.67644104001142635, 0.08942676055004592},
    {0.29129888220952682, -0.67644104001142635, -0.67644104001142635, 0.08942676055004592},
    {-0.29129888220952682, -0.67644104001142635, -0.67644104001142635, 0.08942676055004592},
    {0.4174961227965453, 0.4174961227965453, 0.8070898183595826, 0.084871124391214747},
    {-0.4174961227965453, 0.4174961227965453, 0.8070898183595826, 0.084871124391214747},
    {0.4174961227965453, -0.4174961227965453, 0.8070898183595826, 0.084871124391214747},
    {0.4174961227965453, 0.4174961227965453, -0.8070898183595826, 0.084871124391214747},
    {-0.4174961227965453, -0.4174961227965453, 0.8070898183595826, 0.084871124391214747},
    {-0.4174961227965453, 0.4174961227965453, -0.8070898183595826, 0.084871124391214747},
    {0.4174961227965453, -0.4174961227965453, -0.8070898183595826, 0.084871124391214747},
    {-0.4174961227965453, -0.4174961227965453, -0.8070898183595826, 0.084871124391214747},
    {-0.4174961227965453, 0.8070898183595826, 0.4174961227965453, 0.084871124391214747},
    {0.4174961227965453, -0.8070898183595826, 0.4174961227965453, 0.084871124391214747},
    {0.4174961227965453, 0.8070898183595826, -0.4174961227965453, 0.084871124391214747},
    {-0.4174961227965453, -0.8070898183595826, 0.4174961227965453, 0.084871124391214747},
    {-0.4174961227965453, 0.8070898183595826, -0.4174961227965453, 0.084871124391214747},
    {0.4174961227965453, -0.8070898183595826, -0.4174961227965453, 0.084871124391214747},
    {-0.4174961227965453, -0.8070898183595826, -0.4174961227965453, 0.084871124391214747},
    {0.4174961227965453, 0.8070898183595826, 0.4174961227965453, 0.084871124391214747},
    {0.8070898183595826, 0.4174961227965453, 0.4174961227965453, 0.084871124391214747},
    {-0.8070898183595826, 0.4174961227965453, 0.4174961227965453, 0.084871124391214747},
    {0.8070898183595826, -0.4174961227965453, 0.4174961227965453, 0.084871124391214747},
    {0.8070898183595826, 0.4174961227965453, -0.4174961227965453, 0.084871124391214747},
    {-0.8070898183595826, -0.4174961227965453, 0.4174961227965453, 0.084871124391214747},
    {-0.8070898183595826, 0.4174961227965453, -0.4174961227965453, 0.084871124391214747},
    {0.8070898183595826, -0.4174961227965453, -0.4174961227965453, 0.084871124391214747},
    {-0.8070898183595826, -0.4174961227965453, -0.4174961227965453, 0.084871124391214747},
    {0.1574676672039082, 0.1574676672039082, 0.97488864367717321, 0.095182644181910372},
    {-0.1574676672039082, 0.1574676672039082, 0.97488864367717321, 0.095182644181910372},
    {0.1574676672039082, -0.1574676672039082, 0.97488864367717321, 0.095182644181910372},
    {0.1574676672039082, 0.1574676672039082, -0.97488864367717321, 0.095182644181910372},
    {-0.1574676672039082, -0.1574676672039082, 0.97488864367717321, 0.095182644181910372},
    {-0.1574676672039082, 0.1574676672039082, -0.97488864367717321, 0.095182644181910372},
    {0.1574676672039082, -0.1574676672039082, -0.97488864367717321, 0.095182644181910372},
    {-0.1574676672039082, -0.1574676672039082, -0.97488864367717321, 0.095182644181910372},
    {-0.1574676672039082, 0.97488864367717321, 0.1574676672039082, 0.095182644181910372},
    {0.1574676672039082, -0.97488864367717321, 0.1574676672039082, 0.095182644181910372},
    {0.1574676672039082, 0.97488864367717321, -0.1574676672039082, 0.095182644181910372},
    {-0.1574676672039082, -0.97488864367717321, 0.1574676672039082, 0.095182644181910372},
    {-0.1574676672039082, 0.97488864367717321, -0.1574676672039082, 0.095182644181910372},
    {0.1574676672039082, -0.97488864367717321, -0.1574676672039082, 0.095182644181910372},
    {-0.1574676672039082, -0.97488864367717321, -0.1574676672039082, 0.095182644181910372},
    {0.1574676672039082, 0.97488864367717321, 0.1574676672039082, 0.095182644181910372},
    {0.97488864367717321, 0.1574676672039082, 0.1574676672039082, 0.095182644181910372},
    {-0.97488864367717321, 0.1574676672039082, 0.1574676672039082, 0.095182644181910372},
    {0.97488864367717321, -0.1574676672039082, 0.1574676672039082, 0.095182644181910372},
    {0.97488864367717321, 0.1574676672039082, -0.1574676672039082, 0.095182644181910372},
    {-0.97488864367717321, -0.1574676672039082, 0.1574676672039082, 0.095182644181910372},
    {-0.97488864367717321, 0.1574676672039082, -0.1574676672039082, 0.095182644181910372},
    {0.97488864367717321, -0.1574676672039082, -0.1574676672039082, 0.095182644181910372},
    {-0.97488864367717321, -0.1574676672039082, -0.1574676672039082, 0.095182644181910372},
    {0.14035538117131829, 0.4493328323269557, 0.88227001126032267, 0.087852594678968152},
    {-0.14035538117131829, 0.4493328323269557, 0.88227001126032267, 0.087852594678968152},
    {0.14035538117131829, -0.4493328323269557, 0.88227001126032267, 0.087852594678968152},
    {0.14035538117131829, 0.4493328323269557, -0.88227001126032267, 0.087852594678968152},
    {-0.14035538117131829, -0.4493328323269557, 0.88227001126032267, 0.087852594678968152},
    {0.14035538117131829, -0.4493328323269557, -0.88227001126032267, 0.087852594678968152},
    {-0.14035538117131829, 0.4493328323269557, -0.88227001126032267, 0.087852594678968152},
    {-0.14035538117131829, -0.4493328323269557, -0.88227001126032267, 0.087852594678968152},
    {0.4493328323269557, 0.14035538117131829, 0.88227001126032267, 0.087852594678968152},
    {-0.4493328323269557, 0.14035538117131829, 0.88227001126032267, 0.087852594678968152},
    {0.4493328323269557, -0.14035538117131829, 0.88227001126032267, 0.087852594678968152},
    {0.4493328323269557, 0.14035538117131829, -0.88227001126032267, 0.087852594678968152},
    {-0.4493328323269557, -0.14035538117131829, 0.88227001126032267, 0.087852594678968152},
    {0.4493328323269557, -0.14035538117131829, -0.88227001126032267, 0.087852594678968152},
    {-0.4493328323269557, 0.14035538117131829, -0.88227001126032267, 0.087852594678968152},
    {-0.4493328323269557, -0.14035538117131829, -0.88227001126032267, 0.087852594678968152},
    {0.88227001126032267, 0.14035538117131829, 0.4493328323269557, 0.087852594678968152},
    {-0.88227001126032267, 0.14035538117131829, 0.4493328323269557, 0.087852594678968152},
    {0.88227001126032267, -0.14035538117131829, 0.4493328323269557, 0.087852594678968152},
    {0.88227001126032267, 0.14035538117131829, -0.4493328323269557, 0.087852594678968152},
    {-0.88227001126032267, -0.14035538117131829, 0.4493328323269557, 0.087852594678968152},
    {0.88227001126032267, -0.14035538117131829, -0.4493328323269557, 0.087852594678968152},
    {-0.88227001126032267, 0.14035538117131829, -0.4493328323269557, 0.087852594678968152},
    {-0.88227001126032267, -0.14035538117131829, -0.4493328323269557, 0.087852594678968152},
    {0.88227001126032267, 0.4493328323269557, 0.14035538117131829, 0.087852594678968152},
    {-0.88227001126032267, 0.4493328323269557, 0.14035538117131829, 0.087852594678968152},
    {0.88227001126032267, -0.4493328323269557, 0.14035538117131829, 0.087852594678968152},
    {0.88227001126032267, 0.4493328323269557, -0.14035538117131829, 0.087852594678968152},
    {-0.88227001126032267, -0.4493328323269557, 0.14035538117131829, 0.087852594678968152},
    {0.88227001126032267, -0.4493328323269557, -0.14035538117131829, 0.087852594678968152},
    {-0.88227001126032267, 0.4493328323269557, -0.14035538117131829, 0.087852594678968152},
    {-0.88227001126032267, -0.4493328323269557, -0.14035538117131829, 0.087852594678968152},
    {0.14035538117131829, 0.88227001126032267, 0.4493328323269557, 0.087852594678968152},
    {-0.14035538117131829, 0.88227001126032267, 0.4493328323269557, 0.087852594678968152},
    {0.14035538117131829, -0.88227001126032267, 0.4493328323269557, 0.087852594678968152},
    {0.14035538117131829, 0.88227001126032267, -0.4493328323269557, 0.087852594678968152},
    {-0.14035538117131829, -0.88227001126032267, 0.4493328323269557, 0.087852594678968152},
    {0.14035538117131829, -0.88227001126032267, -0.4493328323269557, 0.087852594678968152},
    {-0.14035538117131829, 0.88227001126032267, -0.4493328323269557, 0.087852594678968152},
    {-0.14035538117131829, -0.88227001126032267, -0.4493328323269557, 0.087852594678968152},
    {0.4493328323269557, 0.88227001126032267, 0.14035538117131829, 0.087852594678968152},
    {-0.4493328323269557, 0.88227001126032267, 0.14035538117131829, 0.087852594678968152},
    {0.4493328323269557, -0.88227001126032267, 0.14035538117131829, 0.087852594678968152},
    {0.4493328323269557, 0.88227001126032267, -0.14035538117131829, 0.087852594678968152},
    {-0.4493328323269557, -0.88227001126032267, 0.14035538117131829, 0.087852594678968152},
    {0.4493328323269557, -0.88227001126032267, -0.14035538117131829, 0.087852594678968152},
    {-0.4493328323269557, 0.88227001126032267, -0.14035538117131829, 0.087852594678968152},
    {-0.4493328323269557, -0.88227001126032267, -0.14035538117131829, 0.087852594678968152},
};
constexpr double lebedev_170[170][4] = {
    {1, 0, 0, 0.069678550905400385},
    {-1, 0, 0, 0.069678550905400385},
    {0, 1, 0, 0.069678550905400385},
    {0, -1, 0, 0.069678550905400385},
    {0, 0, 1, 0.069678550905400385},
    {0, 0, -1, 0.069678550905400385},
    {0, 0.70710678118654757, 0.70710678118654757, 0.076294617719352795},
    {0, -0.70710678118654757, 0.70710678118654757, 0.076294617719352795},
    {0, 0.70710678118654757, -0.70710678118654757, 0.076294617719352795},
    {0, -0.70710678118654757, -0.70710678118654757, 0.076294617719352795},
    {0.70710678118654757, 0, 0.70710678118654757, 0.076294617719352795},
    {0.70710678118654757, 0, -0.70710678118654757, 0.076294617719352795},
    {-0.70710678118654757, 0, 0.70710678118654757, 0.076294617719352795},
    {-0.70710678118654757, 0, -0.70710678118654757, 0.076294617719352795},
    {0.70710678118654757, 0.70710678118654757, 0, 0.076294617719352795},
    {-0.70710678118654757, 0.70710678118654757, 0, 0.076294617719352795},
    {0.70710678118654757, -0.70710678118654757, 0, 0.076294617719352795},
    {-0.70710678118654757, -0.70710678118654757, 0, 0.076294617719352795},
    {0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.080219623085526007},
    {-0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.080219623085526007},
    {0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.080219623085526007},
    {0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.080219623085526007},
    {-0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.080219623085526007},
    {0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.080219623085526007},
    {-0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.080219623085526007},
    {-0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.080219623085526007},
    {0.2551252621114134, 0.2551252621114134, 0.93264259031269059, 0.06513636946550791},
    {-0.2551252621114134, 0.2551252621114134, 0.93264259031269059, 0.06513636946550791},
    {0.2551252621114134, -0.2551252621114134, 0.93264259031269059, 0.06513636946550791},
    {0.2551252621114134, 0.2551252621114134, -0.93264259031269059, 0.06513636946550791},
    {-0.2551252621114134, -0.2551252621114134, 0.93264259031269059, 0.06513636946550791},
    {-0.2551252621114134, 0.2551252621114134, -0.93264259031269059, 0.06513636946550791},
    {0.2551252621114134, -0.2551252621114134, -0.93264259031269059, 0.06513636946550791},
    {-0.2551252621114134, -0.2551252621114134, -0.93264259031269059, 0.06513636946550791},
    {-0.2551252621114134, 0.93264259031269059, 0.2551252621114134, 0.06513636946550791},
    {0.2551252621114134, -0.93264259031269059, 0.2551252621114134, 0.06513636946550791},
    {0.2551252621114134, 0.93264259031269059, -0.2551252621114134, 0.06513636946550791},
    {-0.2551252621114134, -0.93264259031269059, 0.2551252621114134, 0.06513636946550791},
    {-0.2551252621114134, 0.93264259031269059, -0.2551252621114134, 0.06513636946550791},
    {0.2551252621114134, -0.93264259031269059, -0.2551252621114134, 0.06513636946550791},
    {-0.2551252621114134, -0.93264259031269059, -0.2551252621114134, 0.06513636946550791},
    {0.2551252621114134, 0.93264259031269059, 0.2551252621114134, 0.06513636946550791},
    {0.93264259031269059, 0.2551252621114134, 0.2551252621114134, 0.06513636946550791},
    {-0.93264259031269059, 0.2551252621114134, 0.2551252621114134, 0.06513636946550791},
    {0.93264259031269059, -0.2551252621114134, 0.2551252621114134, 0.06513636946550791},
    {0.93264259031269059, 0.2551252621114134, -0.2551252621114134, 0.06513636946550791},
    {-0.93264259031269059, -0.2551252621114134, 0.2551252621114134, 0.06513636946550791},
    {-0.93264259031269059, 0.2551252621114134, -0.2551252621114134, 0.06513636946550791},
    {0.93264259031269059, -0.2551252621114134, -0.2551252621114134, 0.06513636946550791},
    {-0.93264259031269059, -0.2551252621114134, -0.2551252621114134, 0.06513636946550791},
    {0.67436014603627659, 0.67436014603627659, 0.30079359513770149, 0.079393437452530538},
    {-0.67436014603627659, 0.67436014603627659, 0.30079359513770149, 0.079393437452530538},
    {0.67436014603627659, -0.67436014603627659, 0.30079359513770149, 0.079393437452530538},
    {0.67436014603627659, 0.67436014603627659, -0.30079359513770149, 0.079393437452530538},
    {-0.67436014603627659, -0.67436014603627659, 0.30079359513770149, 0.079393437452530538},
    {-0.67436014603627659, 0.67436014603627659, -0.30079359513770149, 0.079393437452530538},
    {0.67436014603627659, -0.67436014603627659, -0.30079359513770149, 0.079393437452530538},
    {-0.67436014603627659, -0.67436014603627659, -0.30079359513770149, 0.079393437452530538},
    {-0.67436014603627659, 0.30079359513770149, 0.67436014603627659, 0.079393437452530538},
    {0.67436014603627659, -0.30079359513770149, 0.67436014603627659, 0.079393437452530538},
    {0.67436014603627659, 0.30079359513770149, -0.67436014603627659, 0.079393437452530538},
    {-0.67436014603627659, -0.30079359513770149, 0.67436014603627659, 0.079393437452530538},
    {-0.67436014603627659, 0.30079359513770149, -0.67436014603627659, 0.079393437452530538},
    {0.67436014603627659, -0.30079359513770149, -0.67436014603627659, 0.079393437452530538},
    {-0.67436014603627659, -0.30079359513770149, -0.67436014603627659, 0.079393437452530538},
    {0.67436014603627659, 0.30079359513770149, 0.67436014603627659, 0.079393437452530538},
    {0.30079359513770149, 0.67436014603627659, 0.67436014603627659, 0.079393437452530538},
    {-0.30079359513770149, 0.67436014603627659, 0.67436014603627659, 0.079393437452530538},
    {0.30079359513770149, -0.67436014603627659, 0.67436014603627659, 0.079393437452530538},
    {0.30079359513770149, 0.67436014603627659, -0.67436014603627659, 0.079393437452530538},
    {-0.30079359513770149, -0.67436014603627659, 0.67436014603627659, 0.079393437452530538},
    {-0.30079359513770149, 0.67436014603627659, -0.67436014603627659, 0.079393437452530538},
    {0.30079359513770149, -0.67436014603627659, -0.67436014603627659, 0.079393437452530538},
    {-0.30079359513770149, -0.67436014603627659, -0.67436014603627659, 0.079393437452530538},
    {0.43189106967194102, 0.43189106967194102, 0.79179555939349211, 0.077932483730753635},
    {-0.43189106967194102, 0.43189106967194102, 0.79179555939349211, 0.077932483730753635},
    {0.43189106967194102, -0.43189106967194102, 0.79179555939349211, 0.077932483730753635},
    {0.43189106967194102, 0.43189106967194102, -0.79179555939349211, 0.077932483730753635},
    {-0.43189106967194102, -0.43189106967194102, 0.79179555939349211, 0.077932483730753635},
    {-0.43189106967194102, 0.43189106967194102, -0.79179555939349211, 0.077932483730753635},
    {0.43189106967194102, -0.43189106967194102, -0.79179555939349211, 0.077932483730753635},
    {-0.43189106967194102, -0.43189106967194102, -0.79179555939349211, 0.077932483730753635},
    {-0.43189106967194102, 0.79179555939349211, 0.43189106967194102, 0.077932483730753635},
    {0.43189106967194102, -0.79179555939349211, 0.43189106967194102, 0.077932483730753635},
    {0.43189106967194102, 0.79179555939349211, -0.43189106967194102, 0.077932483730753635},
    {-0.43189106967194102, -0.79179555939349211, 0.43189106967194102, 0.077932483730753635},
    {-0.43189106967194102, 0.79179555939349211, -0.43189106967194102, 0.077932483730753635},
    {0.43189106967194102, -0.79179555939349211, -0.43189106967194102, 0.077932483730753635},
    {-0.43189106967194102, -0.79179555939349211, -0.43189106967194102, 0.077932483730753635},
    {0.43189106967194102, 0.79179555939349211, 0.43189106967194102, 0.077932483730753635},
    {0.79179555939349211, 0.43189106967194102, 0.43189106967194102, 0.077932483730753635},
    {-0.79179555939349211, 0.43189106967194102, 0.43189106967194102, 0.077932483730753635},
    {0.79179555939349211, -0.43189106967194102, 0.43189106967194102, 0.077932483730753635},
    {0.79179555939349211, 0.43189106967194102, -0.43189106967194102, 0.077932483730753635},
    {-0.79179555939349211, -0.43189106967194102, 0.43189106967194102, 0.077932483730753635},
    {-0.79179555939349211, 0.43189106967194102, -0.43189106967194102, 0.077932483730753635},
    {0.79179555939349211, -0.43189106967194102, -0.43189106967194102, 0.077932483730753635},
    {-0.79179555939349211, -0.43189106967194102, -0.43189106967194102, 0.077932483730753635},
    {0.26139313603359882, 0.96523242197644843, 0, 0.068827813685621686},
    {-0.26139313603359882, 0.96523242197644843, 0, 0.068827813685621686},
    {0.26139313603359882, -0.96523242197644843, 0, 0.068827813685621686},
    {-0.26139313603359882, -0.96523242197644843, 0, 0.068827813685621686},
    {0.96523242197644843, 0.26139313603359882, 0, 0.068827813685621686},
    {-0.96523242197644843, 0.26139313603359882, 0, 0.068827813685621686},
    {0.96523242197644843, -0.26139313603359882, 0, 0.068827813685621686},
    {-0.96523242197644843, -0.26139313603359882, 0, 0.068827813685621686},
    {0.26139313603359882, 0, 0.96523242197644843, 0.068827813685621686},
    {-0.26139313603359882, 0, 0.96523242197644843, 0.068827813685621686},
    {0.26139313603359882, 0, -0.96523242197644843, 0.068827813685621686},
    {-0.26139313603359882, 0, -0.96523242197644843, 0.068827813685621686},
    {0.96523242197644843, 0, 0.26139313603359882, 0.068827813685621686},
    {-0.96523242197644843, 0, 0.26139313603359882, 0.068827813685621686},
    {0.96523242197644843, 0, -0.26139313603359882, 0.068827813685621686},
    {-0.96523242197644843, 0, -0.26139313603359882, 0.068827813685621686},
    {0, 0.26139313603359882, 0.96523242197644843, 0.068827813685621686},
    {0, -0.26139313603359882, 0.96523242197644843, 0.068827813685621686},
    {0, 0.26139313603359882, -0.96523242197644843, 0.068827813685621686},
    {0, -0.26139313603359882, -0.96523242197644843, 0.068827813685621686},
    {0, 0.96523242197644843, 0.26139313603359882, 0.068827813685621686},
    {0, -0.96523242197644843, 0.26139313603359882, 0.068827813685621686},
    {0, 0.96523242197644843, -0.26139313603359882, 0.068827813685621686},
    {0, -0.96523242197644843, -0.26139313603359882, 0.068827813685621686},
    {0.49904531617960368, 0.1446630744325115, 0.85441580468465883, 0.075000925158008297},
    {-0.49904531617960368, 0.1446630744325115, 0.85441580468465883, 0.075000925158008297},
    {0.49904531617960368, -0.1446630744325115, 0.85441580468465883, 0.075000925158008297},
    {0.49904531617960368, 0.1446630744325115, -0.85441580468465883, 0.075000925158008297},
    {-0.49904531617960368, -0.1446630744325115, 0.85441580468465883, 0.075000925158008297},
    {0.49904531617960368, -0.1446630744325115, -0.85441580468465883, 0.075000925158008297},
    {-0.49904531617960368, 0.1446630744325115, -0.85441580468465883, 0.075000925158008297},
    {-0.49904531617960368, -0.1446630744325115, -0.85441580468465883, 0.075000925158008297},
    {0.1446630744325115, 0.49904531617960368, 0.85441580468465883, 0.075000925158008297},
    {-0.1446630744325115, 0.49904531617960368, 0.85441580468465883, 0.075000925158008297},
    {0.1446630744325115, -0.49904531617960368, 0.85441580468465883, 0.075000925158008297},
    {0.1446630744325115, 0.49904531617960368, -0.85441580468465883, 0.075000925158008297},
    {-0.1446630744325115, -0.49904531617960368, 0.85441580468465883, 0.075000925158008297},
    {0.1446630744325115, -0.49904531617960368, -0.85441580468465883, 0.075000925158008297},
    {-0.1446630744325115, 0.49904531617960368, -0.85441580468465883, 0.075000925158008297},
    {-0.1446630744325115, -0.49904531617960368, -0.85441580468465883, 0.075000925158008297},
    {0.85441580468465883, 0.49904531617960368, 0.1446630744325115, 0.075000925158008297},
    {-0.85441580468465883, 0.49904531617960368, 0.1446630744325115, 0.075000925158008297},
    {0.85441580468465883, -0.49904531617960368, 0.1446630744325115, 0.075000925158008297},
    {0.85441580468465883, 0.49904531617960368, -0.1446630744325115, 0.075000925158008297},
    {-0.85441580468465883, -0.49904531617960368, 0.1446630744325115, 0.075000925158008297},
    {0.85441580468465883, -0.49904531617960368, -0.1446630744325115, 0.075000925158008297},
    {-0.85441580468465883, 0.49904531617960368, -0.1446630744325115, 0.075000925158008297},
    {-0.85441580468465883, -0.49904531617960368, -0.1446630744325115, 0.075000925158008297},
    {0.85441580468465883, 0.1446630744325115, 0.49904531617960368, 0.075000925158008297},
    {-0.85441580468465883, 0.1446630744325115, 0.49904531617960368, 0.075000925158008297},
    {0.85441580468465883, -0.1446630744325115, 0.49904531617960368, 0.075000925158008297},
    {0.85441580468465883, 0.1446630744325115, -0.49904531617960368, 0.075000925158008297},
    {-0.85441580468465883, -0.1446630744325115, 0.49904531617960368, 0.075000925158008297},
    {0.85441580468465883, -0.1446630744325115, -0.49904531617960368, 0.075000925158008297},
    {-0.85441580468465883, 0.1446630744325115, -0.49904531617960368, 0.075000925158008297},
    {-0.85441580468465883, -0.1446630744325115, -0.49904531617960368, 0.075000925158008297},
    {0.49904531617960368, 0.85441580468465883, 0.1446630744325115, 0.075000925158008297},
    {-0.49904531617960368, 0.85441580468465883, 0.1446630744325115, 0.075000925158008297},
    {0.49904531617960368, -0.85441580468465883, 0.1446630744325115, 0.075000925158008297},
    {0.49904531617960368, 0.85441580468465883, -0.1446630744325115, 0.075000925158008297},
    {-0.49904531617960368, -0.85441580468465883, 0.1446630744325115, 0.075000925158008297},
    {0.49904531617960368, -0.85441580468465883, -0.1446630744325115, 0.075000925158008297},
    {-0.49904531617960368, 0.85441580468465883, -0.1446630744325115, 0.075000925158008297},
    {-0.49904531617960368, -0.85441580468465883, -0.1446630744325115, 0.075000925158008297},
    {0.1446630744325115, 0.85441580468465883, 0.49904531617960368, 0.075000925158008297},
    {-0.1446630744325115, 0.85441580468465883, 0.49904531617960368, 0.075000925158008297},
    {0.1446630744325115, -0.85441580468465883, 0.49904531617960368, 0.075000925158008297},
    {0.1446630744325115, 0.85441580468465883, -0.49904531617960368, 0.075000925158008297},
    {-0.1446630744325115, -0.85441580468465883, 0.49904531617960368, 0.075000925158008297},
    {0.1446630744325115, -0.85441580468465883, -0.49904531617960368, 0.075000925158008297},
    {-0.1446630744325115, 0.85441580468465883, -0.49904531617960368, 0.075000925158008297},
    {-0.1446630744325115, -0.85441580468465883, -0.49904531617960368, 0.075000925158008297},
};
constexpr double lebedev_194[194][4] = {
    {1, 0, 0, 0.022397550621038466},
    {-1, 0, 0, 0.022397550621038466},
    {0, 1, 0, 0.022397550621038466},
    {0, -1, 0, 0.022397550621038466},
    {0, 0, 1, 0.022397550621038466},
    {0, 0, -1, 0.022397550621038466},
    {0, 0.70710678118654757, 0.70710678118654757, 0.071840758934847357},
    {0, -0.70710678118654757, 0.70710678118654757, 0.071840758934847357},
    {0, 0.70710678118654757, -0.70710678118654757, 0.071840758934847357},
    {0, -0.70710678118654757, -0.70710678118654757, 0.071840758934847357},
    {0.70710678118654757, 0, 0.70710678118654757, 0.071840758934847357},
    {0.70710678118654757, 0, -0.70710678118654757, 0.071840758934847357},
    {-0.70710678118654757, 0, 0.70710678118654757, 0.071840758934847357},
    {-0.70710678118654757, 0, -0.70710678118654757, 0.071840758934847357},
    {0.70710678118654757, 0.70710678118654757, 0, 0.071840758934847357},
    {-0.70710678118654757, 0.70710678118654757, 0, 0.071840758934847357},
    {0.70710678118654757, -0.70710678118654757, 0, 0.071840758934847357},
    {-0.70710678118654757, -0.70710678118654757, 0, 0.071840758934847357},
    {0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.07003719860124849},
    {-0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.07003719860124849},
    {0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.07003719860124849},
    {0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.07003719860124849},
    {-0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.07003719860124849},
    {0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.07003719860124849},
    {-0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.07003719860124849},
    {-0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.07003719860124849},
    {0.67129734426952259, 0.67129734426952259, 0.31419699418258629, 0.070481054168070129},
    {-0.67129734426952259, 0.67129734426952259, 0.31419699418258629, 0.070481054168070129},
    {0.67129734426952259, -0.67129734426952259, 0.31419699418258629, 0.070481054168070129},
    {0.67129734426952259, 0.67129734426952259, -0.31419699418258629, 0.070481054168070129},
    {-0.67129734426952259, -0.67129734426952259, 0.31419699418258629, 0.070481054168070129},
    {-0.67129734426952259, 0.67129734426952259, -0.31419699418258629, 0.070481054168070129},
    {0.67129734426952259, -0.67129734426952259, -0.31419699418258629, 0.070481054168070129},
    {-0.67129734426952259, -0.67129734426952259, -0.31419699418258629, 0.070481054168070129},
    {-0.67129734426952259, 0.31419699418258629, 0.67129734426952259, 0.070481054168070129},
    {0.67129734426952259, -0.31419699418258629, 0.67129734426952259, 0.070481054168070129},
    {0.67129734426952259, 0.31419699418258629, -0.67129734426952259, 0.070481054168070129},
    {-0.67129734426952259, -0.31419699418258629, 0.67129734426952259, 0.070481054168070129},
    {-0.67129734426952259, 0.31419699418258629, -0.67129734426952259, 0.070481054168070129},
    {0.67129734426952259, -0.31419699418258629, -0.67129734426952259, 0.070481054168070129},
    {-0.67129734426952259, -0.31419699418258629, -0.67129734426952259, 0.070481054168070129},
    {0.67129734426952259, 0.31419699418258629, 0.67129734426952259, 0.070481054168070129},
    {0.31419699418258629, 0.67129734426952259, 0.67129734426952259, 0.070481054168070129},
    {-0.31419699418258629, 0.67129734426952259, 0.67129734426952259, 0.070481054168070129},
    {0.31419699418258629, -0.67129734426952259, 0.67129734426952259, 0.070481054168070129},
    {0.31419699418258629, 0.67129734426952259, -0.67129734426952259, 0.070481054168070129},
    {-0.31419699418258629, -0.67129734426952259, 0.67129734426952259, 0.070481054168070129},
    {-0.31419699418258629, 0.67129734426952259, -0.67129734426952259, 0.070481054168070129},
    {0.31419699418258629, -0.67129734426952259, -0.67129734426952259, 0.070481054168070129},
    {-0.31419699418258629, -0.67129734426952259, -0.67129734426952259, 0.070481054168070129},
    {0.2892465627575439, 0.2892465627575439, 0.91250909686747372, 0.064820326803510464},
    {-0.2892465627575439, 0.2892465627575439, 0.91250909686747372, 0.064820326803510464},
    {0.2892465627575439, -0.2892465627575439, 0.91250909686747372, 0.064820326803510464},
    {0.2892465627575439, 0.2892465627575439, -0.91250909686747372, 0.064820326803510464},
    {-0.2892465627575439, -0.2892465627575439, 0.91250909686747372, 0.064820326803510464},
    {-0.2892465627575439, 0.2892465627575439, -0.91250909686747372, 0.064820326803510464},
    {0.2892465627575439, -0.2892465627575439, -0.91250909686747372, 0.064820326803510464},
    {-0.2892465627575439, -0.2892465627575439, -0.91250909686747372, 0.064820326803510464},
    {-0.2892465627575439, 0.91250909686747372, 0.2892465627575439, 0.064820326803510464},
    {0.2892465627575439, -0.91250909686747372, 0.2892465627575439, 0.064820326803510464},
    {0.2892465627575439, 0.91250909686747372, -0.2892465627575439, 0.064820326803510464},
    {-0.2892465627575439, -0.91250909686747372, 0.2892465627575439, 0.064820326803510464},
    {-0.2892465627575439, 0.91250909686747372, -0.2892465627575439, 0.064820326803510464},
    {0.2892465627575439, -0.91250909686747372, -0.2892465627575439, 0.064820326803510464},
    {-0.2892465627575439, -0.91250909686747372, -0.2892465627575439, 0.064820326803510464},
    {0.2892465627575439, 0.91250909686747372, 0.2892465627575439, 0.064820326803510464},
    {0.91250909686747372, 0.2892465627575439, 0.2892465627575439, 0.064820326803510464},
    {-0.91250909686747372, 0.2892465627575439, 0.2892465627575439, 0.064820326803510464},
    {0.91250909686747372, -0.2892465627575439, 0.2892465627575439, 0.064820326803510464},
    {0.91250909686747372, 0.2892465627575439, -0.2892465627575439, 0.064820326803510464},
    {-0.91250909686747372, -0.2892465627575439, 0.2892465627575439, 0.064820326803510464},
    {-0.91250909686747372, 0.2892465627575439, -0.2892465627575439, 0.064820326803510464},
    {0.91250909686747372, -0.2892465627575439, -0.2892465627575439, 0.064820326803510464},
    {-0.91250909686747372, -0.2892465627575439, -0.2892465627575439, 0.064820326803510464},
    {0.44469331787174371, 0.44469331787174371, 0.77749321931476711, 0.069350927593711004},
    {-0.44469331787174371, 0.44469331787174371, 0.77749321931476711, 0.069350927593711004},
    {0.44469331787174371, -0.44469331787174371, 0.77749321931476711, 0.069350927593711004},
    {0.44469331787174371, 0.44469331787174371, -0.77749321931476711, 0.069350927593711004},
    {-0.44469331787174371, -0.44469331787174371, 0.77749321931476711, 0.069350927593711004},
    {-0.44469331787174371, 0.44469331787174371, -0.77749321931476711, 0.069350927593711004},
    {0.44469331787174371, -0.44469331787174371, -0.77749321931476711, 0.069350927593711004},
    {-0.44469331787174371, -0.44469331787174371, -0.77749321931476711, 0.069350927593711004},
    {-0.44469331787174371, 0.77749321931476711, 0.44469331787174371, 0.069350927593711004},
    {0.44469331787174371, -0.77749321931476711, 0.44469331787174371, 0.069350927593711004},
    {0.44469331787174371, 0.77749321931476711, -0.44469331787174371, 0.069350927593711004},
    {-0.44469331787174371, -0.77749321931476711, 0.44469331787174371, 0.069350927593711004},
    {-0.44469331787174371, 0.77749321931476711, -0.44469331787174371, 0.069350927593711004},
    {0.44469331787174371, -0.77749321931476711, -0.44469331787174371, 0.069350927593711004},
    {-0.44469331787174371, -0.77749321931476711, -0.44469331787174371, 0.069350927593711004},
    {0.44469331787174371, 0.77749321931476711, 0.44469331787174371, 0.069350927593711004},
    {0.77749321931476711, 0.44469331787174371, 0.44469331787174371, 0.069350927593711004},
    {-0.77749321931476711, 0.44469331787174371, 0.44469331787174371, 0.069350927593711004},
    {0.77749321931476711, -0.44469331787174371, 0.44469331787174371, 0.069350927593711004},
    {0.77749321931476711, 0.44469331787174371, -0.44469331787174371, 0.069350927593711004},
    {-0.77749321931476711, -0.44469331787174371, 0.44469331787174371, 0.069350927593711004},
    {-0.77749321931476711, 0.44469331787174371, -0.44469331787174371, 0.069350927593711004},
    {0.77749321931476711, -0.44469331787174371, -0.44469331787174371, 0.069350927593711004},
    {-0.77749321931476711, -0.44469331787174371, -0.44469331787174371, 0.069350927593711004},
    {0.12993354476500671, 0.12993354476500671, 0.98297230270725322, 0.051607282166513162},
    {-0.12993354476500671, 0.12993354476500671, 0.98297230270725322, 0.051607282166513162},
    {0.12993354476500671, -0.12993354476500671, 0.98297230270725322, 0.051607282166513162},
    {0.12993354476500671, 0.12993354476500671, -0.98297230270725322, 0.051607282166513162},
    {-0.12993354476500671, -0.12993354476500671, 0.98297230270725322, 0.051607282166513162},
    {-0.12993354476500671, 0.12993354476500671, -0.98297230270725322, 0.051607282166513162},
    {0.12993354476500671, -0.12993354476500671, -0.98297230270725322, 0.051607282166513162},
    {-0.12993354476500671, -0.12993354476500671, -0.98297230270725322, 0.051607282166513162},
    {-0.12993354476500671, 0.98297230270725322, 0.12993354476500671, 0.051607282166513162},
    {0.12993354476500671, -0.98297230270725322, 0.12993354476500671, 0.051607282166513162},
    {0.12993354476500671, 0.98297230270725322, -0.12993354476500671, 0.051607282166513162},
    {-0.12993354476500671, -0.98297230270725322, 0.12993354476500671, 0.051607282166513162},
    {-0.12993354476500671, 0.98297230270725322, -0.12993354476500671, 0.051607282166513162},
    {0.12993354476500671, -0.98297230270725322, -0.12993354476500671, 0.051607282166513162},
    {-0.12993354476500671, -0.98297230270725322, -0.12993354476500671, 0.051607282166513162},
    {0.12993354476500671, 0.98297230270725322, 0.12993354476500671, 0.051607282166513162},
    {0.98297230270725322, 0.12993354476500671, 0.12993354476500671, 0.051607282166513162},
    {-0.98297230270725322, 0.12993354476500671, 0.12993354476500671, 0.051607282166513162},
    {0.98297230270725322, -0.12993354476500671, 0.12993354476500671, 0.051607282166513162},
    {0.98297230270725322, 0.12993354476500671, -0.12993354476500671, 0.051607282166513162},
    {-0.98297230270725322, -0.12993354476500671, 0.12993354476500671, 0.051607282166513162},
    {-0.98297230270725322, 0.12993354476500671, -0.12993354476500671, 0.051607282166513162},
    {0.98297230270725322, -0.12993354476500671, -0.12993354476500671, 0.051607282166513162},
    {-0.98297230270725322, -0.12993354476500671, -0.12993354476500671, 0.051607282166513162},
    {0.34577021976112832, 0.93831921813759156, 0, 0.063483369934641556},
    {-0.34577021976112832, 0.93831921813759156, 0, 0.063483369934641556},
    {0.34577021976112832, -0.93831921813759156, 0, 0.063483369934641556},
    {-0.34577021976112832, -0.93831921813759156, 0, 0.063483369934641556},
    {0.93831921813759156, 0.34577021976112832, 0, 0.063483369934641556},
    {-0.93831921813759156, 0.34577021976112832, 0, 0.063483369934641556},
    {0.93831921813759156, -0.34577021976112832, 0, 0.063483369934641556},
    {-0.93831921813759156, -0.34577021976112832, 0, 0.063483369934641556},
    {0.34577021976112832, 0, 0.93831921813759156, 0.063483369934641556},
    {-0.34577021976112832, 0, 0.93831921813759156, 0.063483369934641556},
    {0.34577021976112832, 0, -0.93831921813759156, 0.063483369934641556},
    {-0.34577021976112832, 0, -0.93831921813759156, 0.063483369934641556},
    {0.93831921813759156, 0, 0.34577021976112832, 0.063483369934641556},
    {-0.93831921813759156, 0, 0.34577021976112832, 0.063483369934641556},
    {0.93831921813759156, 0, -0.34577021976112832, 0.063483369934641556},
    {-0.93831921813759156, 0, -0.34577021976112832, 0.063483369934641556},
    {0, 0.34577021976112832, 0.93831921813759156, 0.063483369934641556},
    {0, -0.34577021976112832, 0.93831921813759156, 0.063483369934641556},
    {0, 0.34577021976112832, -0.93831921813759156, 0.063483369934641556},
    {0, -0.34577021976112832, -0.93831921813759156, 0.063483369934641556},
    {0, 0.93831921813759156, 0.34577021976112832, 0.063483369934641556},
    {0, -0.93831921813759156, 0.34577021976112832, 0.063483369934641556},
    {0, 0.93831921813759156, -0.34577021976112832, 0.063483369934641556},
    {0, -0.93831921813759156, -0.34577021976112832, 0.063483369934641556},
    {0.159041710538353, 0.83603601548245887, 0.52511857244364202, 0.06949515747104322},
    {-0.159041710538353, 0.83603601548245887, 0.52511857244364202, 0.06949515747104322},
    {0.159041710538353, -0.83603601548245887, 0.52511857244364202, 0.06949515747104322},
    {0.159041710538353, 0.83603601548245887, -0.52511857244364202, 0.06949515747104322},
    {-0.159041710538353, -0.83603601548245887, 0.52511857244364202, 0.06949515747104322},
    {0.159041710538353, -0.83603601548245887, -0.52511857244364202, 0.06949515747104322},
    {-0.159041710538353, 0.83603601548245887, -0.52511857244364202, 0.06949515747104322},
    {-0.159041710538353, -0.83603601548245887, -0.52511857244364202, 0.06949515747104322},
    {0.83603601548245887, 0.159041710538353, 0.52511857244364202, 0.06949515747104322},
    {-0.83603601548245887, 0.159041710538353, 0.52511857244364202, 0.06949515747104322},
    {0.83603601548245887, -0.159041710538353, 0.52511857244364202, 0.06949515747104322},
    {0.83603601548245887, 0.159041710538353, -0.52511857244364202, 0.06949515747104322},
    {-0.83603601548245887, -0.159041710538353, 0.52511857244364202, 0.06949515747104322},
    {0.83603601548245887, -0.159041710538353, -0.52511857244364202, 0.06949515747104322},
    {-0.83603601548245887, 0.159041710538353, -0.52511857244364202, 0.06949515747104322},
    {-0.83603601548245887, -0.159041710538353, -0.52511857244364202, 0.06949515747104322},
    {0.52511857244364202, 0.159041710538353, 0.83603601548245887, 0.06949515747104322},
    {-0.52511857244364202, 0.159041710538353, 0.83603601548245887, 0.06949515747104322},
    {0.52511857244364202, -0.159041710538353, 0.83603601548245887, 0.06949515747104322},
    {0.52511857244364202, 0.159041710538353, -0.83603601548245887, 0.06949515747104322},
    {-0.52511857244364202, -0.159041710538353, 0.83603601548245887, 0.06949515747104322},
    {0.52511857244364202, -0.159041710538353, -0.83603601548245887, 0.06949515747104322},
    {-0.52511857244364202, 0.159041710538353, -0.83603601548245887, 0.06949515747104322},
    {-0.52511857244364202, -0.159041710538353, -0.83603601548245887, 0.06949515747104322},
    {0.52511857244364202, 0.83603601548245887, 0.159041710538353, 0.06949515747104322},
    {-0.52511857244364202, 0.83603601548245887, 0.159041710538353, 0.06949515747104322},
    {0.52511857244364202, -0.83603601548245887, 0.159041710538353, 0.06949515747104322},
    {0.52511857244364202, 0.83603601548245887, -0.159041710538353, 0.06949515747104322},
    {-0.52511857244364202, -0.83603601548245887, 0.159041710538353, 0.06949515747104322},
    {0.52511857244364202, -0.83603601548245887, -0.159041710538353, 0.06949515747104322},
    {-0.52511857244364202, 0.83603601548245887, -0.159041710538353, 0.06949515747104322},
    {-0.52511857244364202, -0.83603601548245887, -0.159041710538353, 0.06949515747104322},
    {0.159041710538353, 0.52511857244364202, 0.83603601548245887, 0.06949515747104322},
    {-0.159041710538353, 0.52511857244364202, 0.83603601548245887, 0.06949515747104322},
    {0.159041710538353, -0.52511857244364202, 0.83603601548245887, 0.06949515747104322},
    {0.159041710538353, 0.52511857244364202, -0.83603601548245887, 0.06949515747104322},
    {-0.159041710538353, -0.52511857244364202, 0.83603601548245887, 0.06949515747104322},
    {0.159041710538353, -0.52511857244364202, -0.83603601548245887, 0.06949515747104322},
    {-0.159041710538353, 0.52511857244364202, -0.83603601548245887, 0.06949515747104322},
    {-0.159041710538353, -0.52511857244364202, -0.83603601548245887, 0.06949515747104322},
    {0.83603601548245887, 0.52511857244364202, 0.159041710538353, 0.06949515747104322},
    {-0.83603601548245887, 0.52511857244364202, 0.159041710538353, 0.06949515747104322},
    {0.83603601548245887, -0.52511857244364202, 0.159041710538353, 0.06949515747104322},
    {0.83603601548245887, 0.52511857244364202, -0.159041710538353, 0.06949515747104322},
    {-0.83603601548245887, -0.52511857244364202, 0.159041710538353, 0.06949515747104322},
    {0.83603601548245887, -0.52511857244364202, -0.159041710538353, 0.06949515747104322},
    {-0.83603601548245887, 0.52511857244364202, -0.159041710538353, 0.06949515747104322},
    {-0.83603601548245887, -0.52511857244364202, -0.159041710538353, 0.06949515747104322},
};
constexpr double lebedev_230[230][4] = {
    {1, 0, 0, -0.69399540000948401},
    {-1, 0, 0, -0.69399540000948401},
    {0, 1, 0, -0.69399540000948401},
    {0, -1, 0, -0.69399540000948401},
    {0, 0, 1, -0.69399540000948401},
    {0, 0, -1, -0.69399540000948401},
    {0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.055923800052828522},
    {-0.57735026918962573, 0.57735026918962573, 0.57735026918962573, 0.055923800052828522},
    {0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.055923800052828522},
    {0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.055923800052828522},
    {-0.57735026918962573, -0.57735026918962573, 0.57735026918962573, 0.055923800052828522},
    {0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.055923800052828522},
    {-0.57735026918962573, 0.57735026918962573, -0.57735026918962573, 0.055923800052828522},
    {-0.57735026918962573, -0.57735026918962573, -0.57735026918962573, 0.055923800052828522},
    {0.44920446873976111, 0.44920446873976111, 0.77228925314836405, 0.056508971453371089},
    {-0.44920446873976111, 0.44920446873976111, 0.77228925314836405, 0.056508971453371089},
    {0.44920446873976111, -0.44920446873976111, 0.77228925314836405, 0.056508971453371089},
    {0.44920446873976111, 0.44920446873976111, -0.77228925314836405, 0.056508971453371089},
    {-0.44920446873976111, -0.44920446873976111, 0.77228925314836405, 0.056508971453371089},
    {-0.44920446873976111, 0.44920446873976111, -0.77228925314836405, 0.056508971453371089},
    {0.44920446873976111, -0.44920446873976111, -0.77228925314836405, 0.056508971453371089},
    {-0.44920446873976111, -0.44920446873976111, -0.77228925314836405, 0.056508971453371089},
    {-0.44920446873976111, 0.77228925314836405, 0.44920446873976111, 0.056508971453371089},
    {0.44920446873976111, -0.77228925314836405, 0.44920446873976111, 0.056508971453371089},
    {0.44920446873976111, 0.77228925314836405, -0.44920446873976111, 0.056508971453371089},
    {-0.44920446873976111, -0.77228925314836405, 0.44920446873976111, 0.056508971453371089},
    {-0.44920446873976111, 0.77228925314836405, -0.44920446873976111, 0.056508971453371089},
    {0.44920446873976111, -0.77228925314836405, -0.44920446873976111, 0.056508971453371089},
    {-0.44920446873976111, -0.77228925314836405, -0.44920446873976111, 0.056508971453371089},
    {0.44920446873976111, 0.77228925314836405, 0.44920446873976111, 0.056508971453371089},
    {0.77228925314836405, 0.44920446873976111, 0.44920446873976111, 0.056508971453371089},
    {-0.77228925314836405, 0.44920446873976111, 0.44920446873976111, 0.056508971453371089},
    {0.77228925314836405, -0.44920446873976111, 0.44920446873976111, 0.056508971453371089},
    {0.77228925314836405, 0.44920446873976111, -0.44920446873976111, 0.056508971453371089},
    {-0.77228925314836405, -0.44920446873976111, 0.44920446873976111, 0.056508971453371089},
    {-0.77228925314836405, 0.44920446873976111, -0.44920446873976111, 0.056508971453371089},
    {0.77228925314836405, -0.44920446873976111, -0.44920446873976111, 0.056508971453371089},
    {-0.77228925314836405, -0.44920446873976111, -0.44920446873976111, 0.056508971453371089},
    {0.25204194902102012, 0.25204194902102012, 0.93431777884581169, 0.06344953354748642},
    {-0.25204194902102012, 0.25204194902102012, 0.93431777884581169, 0.06344953354748642},
    {0.25204194902102012, -0.25204194902102012, 0.93431777884581169, 0.06344953354748642},
    {0.25204194902102012, 0.25204194902102012, -0.93431777884581169, 0.06344953354748642},
    {-0.25204194902102012, -0.25204194902102012, 0.93431777884581169, 0.06344953354748642},
    {-0.25204194902102012, 0.25204194902102012, -0.93431777884581169, 0.06344953354748642},
    {0.25204194902102012, -0.25204194902102012, -0.93431777884581169, 0.06344953354748642},
    {-0.25204194902102012, -0.25204194902102012, -0.93431777884581169, 0.06344953354748642},
    {-0.25204194902102012, 0.93431777884581169, 0.25204194902102012, 0.06344953354748642},
    {0.25204194902102012, -0.93431777884581169, 0.25204194902102012, 0.06344953354748642},
    {0.25204194902102012, 0.93431777884581169, -0.25204194902102012, 0.06344953354748642},
    {-0.25204194902102012, -0.93431777884581169, 0.25204194902102012, 0.06344953354748642},
    {-0.25204194902102012, 0.93431777884581169, -0.25204194902102012, 0.06344953354748642},
    {0.25204194902102012, -0.93431777884581169, -0.25204194902102012, 0.06344953354748642},
    {-0.25204194902102012, -0.93431777884581169, -0.25204194902102012, 0.06344953354748642},
    {0.25204194902102012, 0.93431777884581169, 0.25204194902102012, 0.06344953354748642},
    {0.93431777884581169, 0.25204194902102012, 0.25204194902102012, 0.06344953354748642},
    {-0.93431777884581169, 0.25204194902102012, 0.25204194902102012, 0.06344953354748642},
    {0.93431777884581169, -0.25204194902102012, 0.25204194902102012, 0.06344953354748642},
    {0.93431777884581169, 0.25204194902102012, -0.25204194902102012, 0.06344953354748642},
    {-0.93431777884581169, -0.25204194902102012, 0.25204194902102012, 0.06344953354748642},
    {-0.93431777884581169, 0.25204194902102012, -0.25204194902102012, 0.06344953354748642},
    {0.93431777884581169, -0.25204194902102012, -0.25204194902102012, 0.06344953354748642},
    {-0.93431777884581169, -0.25204194902102012, -0.25204194902102012, 0.06344953354748642},
    {0.69819066584472422, 0.69819066584472422, 0.15830220546347831, 0.049969016868749411},
    {-0.69819066584472422, 0.69819066584472422, 0.15830220546347831, 0.049969016868749411},
    {0.69819066584472422, -0.69819066584472422, 0.15830220546347831, 0.049969016868749411},
    {0.69819066584472422, 0.69819066584472422, -0.15830220546347831, 0.049969016868749411},
    {-0.69819066584472422, -0.69819066584472422, 0.15830220546347831, 0.049969016868749411},
    {-0.69819066584472422, 0.69819066584472422, -0.15830220546347831, 0.049969016868749411},
    {0.69819066584472422, -0.69819066584472422, -0.15830220546347831, 0.049969016868749411},
    {-0.69819066584472422, -0.69819066584472422, -0.15830220546347831, 0.049969016868749411},
    {-0.69819066584472422, 0.15830220546347831, 0.69819066584472422, 0.049969016868749411},
    {0.69819066584472422, -0.15830220546347831, 0.69819066584472422, 0.049969016868749411},
    {0.69819066584472422, 0.15830220546347831, -0.69819066584472422, 0.049969016868749411},
    {-0.69819066584472422, -0.15830220546347831, 0.69819066584472422, 0.049969016868749411},
    {-0.69819066584472422, 0.15830220546347831, -0.69819066584472422, 0.049969016868749411},
    {0.69819066584472422, -0.15830220546347831, -0.69819066584472422, 0.049969016868749411},
    {-0.69819066584472422, -0.15830220546347831, -0.69819066584472422, 0.049969016868749411},
    {0.69819066584472422, 0.15830220546347831, 0.69819066584472422, 0.049969016868749411},
    {0.15830220546347831, 0.69819066584472422, 0.69819066584472422, 0.049969016868749411},
    {-0.15830220546347831, 0.69819066584472422, 0.69819066584472422, 0.049969016868749411},
    {0.15830220546347831, -0.69819066584472422, 0.69819066584472422, 0.049969016868749411},
    {0.15830220546347831, 0.69819066584472422, -0.69819066584472422, 0.049969016868749411},
    {-0.15830220546347831, -0.69819066584472422, 0.69819066584472422, 0.049969016868749411},
    {-0.15830220546347831, 0.69819066584472422, -0.69819066584472422, 0.049969016868749411},
    {0.15830220546347831, -0.69819066584472422, -0.69819066584472422, 0.049969016868749411},
    {-0.15830220546347831, -0.69819066584472422, -0.69819066584472422, 0.049969016868749411},
    {0.65874052434609598, 0.65874052434609598, 0.36348568495672712, 0.055309631794969366},
    {-0.65874052434609598, 0.65874052434609598, 0.36348568495672712, 0.055309631794969366},
    {0.65874052434609598, -0.65874052434609598, 0.36348568495672712, 0.055309631794969366},
    {0.65874052434609598, 0.65874052434609598, -0.36348568495672712, 0.055309631794969366},
    {-0.65874052434609598, -0.65874052434609598, 0.36348568495672712, 0.055309631794969366},
    {-0.65874052434609598, 0.65874052434609598, -0.36348568495672712, 0.055309631794969366},
    {0.65874052434609598, -0.65874052434609598, -0.36348568495672712, 0.055309631794969366},
    {-0.65874052434609598, -0.65874052434609598, -0.36348568495672712, 0.055309631794969366},
    {-0.65874052434609598, 0.36348568495672712, 0.65874052434609598, 0.055309631794969366},
    {0.65874052434609598, -0.36348568495672712, 0.65874052434609598, 0.055309631794969366},
    {0.65874052434609598, 0.36348568495672712, -0.65874052434609598, 0.055309631794969366},
    {-0.65874052434609598, -0.36348568495672712, 0.65874052434609598, 0.055309631794969366},
    {-0.65874052434609598, 0.36348568495672712, -0.65874052434609598, 0.055309631794969366},
    {0.65874052434609598, -0.36348568495672712, -0.65874052434609598, 0.055309631794969366},
    {-0.65874052434609598, -0.36348568495672712, -0.65874052434609598, 0.055309631794969366},
    {0.65874052434609598, 0.36348568495672712, 0.65874052434609598, 0.055309631794969366},
    {0.36348568495672712, 0.65874052434609598, 0.65874052434609598, 0.055309631794969366},
    {-0.36348568495672712, 0.65874052434609598, 0.65874052434609598, 0.055309631794969366},
    {0.36348568495672712, -0.65874052434609598, 0.65874052434609598, 0.055309631794969366},
    {0.36348568495672712, 0.65874052434609598, -0.65874052434609598, 0.055309631794969366},
    {-0.36348568495672712, -0.65874052434609598, 0.65874052434609598, 0.055309631794969366},
    {-0.36348568495672712, 0.65874052434609598, -0.65874052434609598, 0.055309631794969366},
    {0.36348568495672712, -0.65874052434609598, -0.65874052434609598, 0.055309631794969366},
    {-0.36348568495672712, -0.65874052434609598, -0.65874052434609598, 0.055309631794969366},
    {0.040385440500976602, 0.040385440500976602, 0.99836768396772746, 0.21671263449840297},
    {-0.040385440500976602, 0.040385440500976602, 0.99836768396772746, 0.21671263449840297},
    {0.040385440500976602, -0.040385440500976602, 0.99836768396772746, 0.21671263449840297},
    {0.040385440500976602, 0.040385440500976602, -0.99836768396772746, 0.21671263449840297},
    {-0.040385440500976602, -0.040385440500976602, 0.99836768396772746, 0.21671263449840297},
    {-0.040385440500976602, 0.040385440500976602, -0.99836768396772746, 0.21671263449840297},
    {0.040385440500976602, -0.040385440500976602, -0.99836768396772746, 0.21671263449840297},
    {-0.040385440500976602, -0.040385440500976602, -0.99836768396772746, 0.21671263449840297},
    {-0.040385440500976602, 0.99836768396772746, 0.040385440500976602, 0.21671263449840297},
    {0.040385440500976602, -0.99836768396772746, 0.040385440500976602, 0.21671263449840297},
    {0.040385440500976602, 0.99836768396772746, -0.040385440500976602, 0.21671263449840297},
    {-0.040385440500976602, -0.99836768396772746, 0.040385440500976602, 0.21671263449840297},
    {-0.040385440500976602, 0.99836768396772746, -0.040385440500976602, 0.21671263449840297},
    {0.040385440500976602, -0.99836768396772746, -0.040385440500976602, 0.21671263449840297},
    {-0.040385440500976602, -0.99836768396772746, -0.040385440500976602, 0.21671263449840297},
    {0.040385440500976602, 0.99836768396772746, 0.040385440500976602, 0.21671263449840297},
    {0.99836768396772746, 0.040385440500976602, 0.040385440500976602, 0.21671263449840297},
    {-0.99836768396772746, 0.040385440500976602, 0.040385440500976602, 0.21671263449840297},
    {0.99836768396772746, -0.040385440500976602, 0.040385440500976602, 0.21671263449840297},
    {0.99836768396772746, 0.040385440500976602, -0.040385440500976602, 0.21671263449840297},
    {-0.99836768396772746, -0.040385440500976602, 0.040385440500976602, 0.21671263449840297},
    {-0.99836768396772746, 0.040385440500976602, -0.040385440500976602, 0.21671263449840297},
    {0.99836768396772746, -0.040385440500976602, -0.040385440500976602, 0.21671263449840297},
    {-0.99836768396772746, -0.040385440500976602, -0.040385440500976602, 0.21671263449840297},
    {0.58238423097155845, 0.81291365317336528, 0, 0.053169358276410394},
    {-0.58238423097155845, 0.81291365317336528, 0, 0.053169358276410394},
    {0.58238423097155845, -0.81291365317336528, 0, 0.053169358276410394},
    {-0.58238423097155845, -0.81291365317336528, 0, 0.053169358276410394},
    {0.81291365317336528, 0.58238423097155845, 0, 0.053169358276410394},
    {-0.81291365317336528, 0.58238423097155845, 0, 0.053169358276410394},
    {0.81291365317336528, -0.58238423097155845, 0, 0.053169358276410394},
    {-0.81291365317336528, -0.58238423097155845, 0, 0.053169358276410394},
    {0.58238423097155845, 0, 0.81291365317336528, 0.053169358276410394},
    {-0.58238423097155845, 0, 0.81291365317336528, 0.053169358276410394},
    {0.58238423097155845, 0, -0.81291365317336528, 0.053169358276410394},
    {-0.58238423097155845, 0, -0.81291365317336528, 0.053169358276410394},
    {0.81291365317336528, 0, 0.58238423097155845, 0.053169358276410394},
    {-0.81291365317336528, 0, 0.58238423097155845, 0.053169358276410394},
    {0.81291365317336528, 0, -0.58238423097155845, 0.053169358276410394},
    {-0.81291365317336528, 0, -0.58238423097155845, 0.053169358276410394},
    {0, 0.58238423097155845, 0.81291365317336528, 0.053169358276410394},
    {0, -0.58238423097155845, 0.81291365317336528, 0.053169358276410394},
    {0, 0.58238423097155845, -0.81291365317336528, 0.053169358276410394},
    {0, -0.58238423097155845, -0.81291365317336528, 0.053169358276410394},
    {0, 0.81291365317336528, 0.58238423097155845, 0.053169358276410394},
    {0, -0.81291365317336528, 0.58238423097155845, 0.053169358276410394},
    {0, 0.81291365317336528, -0.58238423097155845, 0.053169358276410394},
    {0, -0.81291365317336528, -0.58238423097155845, 0.053169358276410394},
    {0.3545877390518688, 0.93502274588059298, 0, 0.06532087239116488},
    {-0.3545877390518688, 0.93502274588059298, 0, 0.06532087239116488},
    {0.3545877390518688, -0.93502274588059298, 0, 0.06532087239116488},
    {-0.3545877390518688, -0.93502274588059298, 0, 0.06532087239116488},
    {0.93502274588059298, 0.3545877390518688, 0, 0.06532087239116488},
    {-0.93502274588059298, 0.3545877390518688, 0, 0.06532087239116488},
    {0.93502274588059298, -0.3545877390518688, 0, 0.06532087239116488},
    {-0.93502274588059298, -0.3545877390518688, 0, 0.06532087239116488},
    {0.3545877390518688, 0, 0.93502274588059298, 0.06532087239116488},
    {-0.3545877390518688, 0, 0.93502274588059298, 0.06532087239116488},
    {0.3545877390518688, 0, -0.93502274588059298, 0.06532087239116488},
    {-0.3545877390518688, 0, -0.93502274588059298, 0.06532087239116488},
    {0.93502274588059298, 0, 0.3545877390518688, 0.06532087239116488},
    {-0.93502274588059298, 0, 0.3545877390518688, 0.06532087239116488},
    {0.93502274588059298, 0, -0.3545877390518688, 0.06532087239116488},
    {-0.93502274588059298, 0, -0.3545877390518688, 0.06532087239116488},
    {0, 0.3545877390518688, 0.93502274588059298, 0.06532087239116488},
    {0, -0.3545877390518688, 0.93502274588059298, 0.06532087239116488},
    {0, 0.3545877390518688, -0.93502274588059298, 0.06532087239116488},
    {0, -0.3545877390518688, -0.93502274588059298, 0.06532087239116488},
    {0, 0.93502274588059298, 0.3545877390518688, 0.06532087239116488},
    {0, -0.93502274588059298, 0.3545877390518688, 0.06532087239116488},
    {0, 0.93502274588059298, -0.3545877390518688, 0.06532087239116488},
    {0, -0.93502274588059298, -0.3545877390518688, 0.06532087239116488},
    {0.22721818089981871, 0.48646615358866468, 0.84363652106889431, 0.059008170042919722},
    {-0.22721818089981871, 0.48646615358866468, 0.84363652106889431, 0.059008170042919722},
    {0.22721818089981871, -0.48646615358866468, 0.84363652106889431, 0.059008170042919722},
    {0.22721818089981871, 0.48646615358866468, -0.84363652106889431, 0.059008170042919722},
    {-0.22721818089981871, -0.48646615358866468, 0.84363652106889431, 0.059008170042919722},
    {0.22721818089981871, -0.48646615358866468, -0.84363652106889431, 0.059008170042919722},
    {-0.22721818089981871, 0.48646615358866468, -0.84363652106889431, 0.059008170042919722},
    {-0.22721818089981871, -0.48646615358866468, -0.84363652106889431, 0.059008170042919722},
    {0.48646615358866468, 0.22721818089981871, 0.84363652106889431, 0.059008170042919722},
    {-0.48646615358866468, 0.22721818089981871, 0.84363652106889431, 0.059008170042919722},
    {0.48646615358866468, -0.22721818089981871, 0.84363652106889431, 0.059008170042919722},
    {0.48646615358866468, 0.22721818089981871, -0.84363652106889431, 0.059008170042919722},
    {-0.48646615358866468, -0.22721818089981871, 0.84363652106889431, 0.059008170042919722},
    {0.48646615358866468, -0.22721818089981871, -0.84363652106889431, 0.059008170042919722},
    {-0.48646615358866468, 0.22721818089981871, -0.84363652106889431, 0.059008170042919722},
    {-0.48646615358866468, -0.22721818089981871, -0.84363652106889431, 0.059008170042919722},
    {0.84363652106889431, 0.22721818089981871, 0.48646615358866468, 0.059008170042919722},
    {-0.84363652106889431, 0.22721818089981871, 0.48646615358866468, 0.059008170042919722},
    {0.84363652106889431, -0.22721818089981871, 0.48646615358866468, 0.059008170042919722},
    {0.84363652106889431, 0.22721818089981871, -0.48646615358866468, 0.059008170042919722},
    {-0.84363652106889431, -0.22721818089981871, 0.48646615358866468, 0.059008170042919722},
    {0.84363652106889431, -0.22721818089981871, -0.48646615358866468, 0.059008170042919722},
    {-0.84363652106889431, 0.22721818089981871, -0.48646615358866468, 0.059008170042919722},
    {-0.84363652106889431, -0.22721818089981871, -0.48646615358866468, 0.059008170042919722},
    {0.84363652106889431, 0.48646615358866468, 0.22721818089981871, 0.059008170042919722},
    {-0.84363652106889431, 0.48646615358866468, 0.22721818089981871, 0.059008170042919722},
    {0.84363652106889431, -0.48646615358866468, 0.22721818089981871, 0.059008170042919722},
    {0.84363652106889431, 0.48646615358866468, -0.22721818089981871, 0.059008170042919722},
    {-0.84363652106889431, -0.48646615358866468, 0.22721818089981871, 0.059008170042919722},
    {0.84363652106889431, -0.48646615358866468, -0.22721818089981871, 0.059008170042919722},
    {-0.84363652106889431, 0.48646615358866468, -0.22721818089981871, 0.059008170042919722},
    {-0.84363652106889431, -0.48646615358866468, -0.22721818089981871, 0.059008170042919722},
    {0.22721818089981871, 0.84363652106889431, 0.48646615358866468, 0.059008170042919722},
    {-0.22721818089981871, 0.84363652106889431, 0.48646615358866468, 0.059008170042919722},
    {0.22721818089981871, -0.84363652106889431, 0.48646615358866468, 0.059008170042919722},
    {0.22721818089981871, 0.84363652106889431, -0.48646615358866468, 0.059008170042919722},
    {-0.22721818089981871, -0.84363652106889431, 0.48646615358866468, 0.059008170042919722},
    {0.22721818089981871, -0.84363652106889431, -0.48646615358866468, 0.059008170042919722},
    {-0.22721818089981871, 0.84363652106889431, -0.48646615358866468, 0.059008170042919722},
    {-0.22721818089981871, -0.84363652106889431, -0.48646615358866468, 0.059008170042919722},
    {0.48646615358866468, 0.84363652106889431, 0.22721818089981871, 0.059008170042919722},
    {-0.48646615358866468, 0.84363652106889431, 0.22721818089981871, 0.059008170042919722},
    {0.48646615358866468, -0.84363652106889431, 0.22721818089981871, 0.059008170042919722},
    {0.48646615358866468, 0.84363652106889431, -0.22721818089981871, 0.059008170042919722},
    {-0.48646615358866468, -0.84363652106889431, 0.22721818089981871, 0.059008170042919722},
    {0.48646615358866468, -0.84363652106889431, -0.22721818089981871, 0.059008170042919722},
    {-0.48646615358866468, 0.84363652106889431, -0.22721818089981871, 0.059008170042919722},
    {-0.48646615358866468, -0.84363652106889431, -0.22721818089981871, 0.059008170042919722},
};
} // namespace

const std::array<LebedevTable, 12>& lebedev_tables() {
    static const std::array<LebedevTable, 12> tables{{
        {6, 3, &lebedev_6[0][0]},
        {14, 5, &lebedev_14[0][0]},
        {26, 7, &lebedev_26[0][0]},
        {38, 9, &lebedev_38[0][0]},
        {50, 11, &lebedev_50[0][0]},
        {74, 13, &lebedev_74[0][0]},
        {86, 15, &lebedev_86[0][0]},
        {110, 17, &lebedev_110[0][0]},
        {146, 19, &lebedev_146[0][0]},
        {170, 21, &lebedev_170[0][0]},
        {194, 23, &lebedev_194[0][0]},
        {230, 25, &lebedev_230[0][0]},
    }};
    return tables;
}

} // namespace mcboltz::detail
