// SPDX-License-Identifier: Apache-2.0
//
// Bundled reference data: seasonal means of all six indices for the 21
// group-stage seasons 2003-2023 (seasons labeled by their first year).
// Shipping these lets trend analysis run without assembling two decades of
// group-level inputs.

#pragma once

#include <array>
#include <span>

#include "groupcb/error.hpp"
#include "groupcb/types.hpp"

namespace groupcb {

inline constexpr int kReferenceFirstSeason = 2003;
inline constexpr int kReferenceLastSeason = 2023;
inline constexpr int kReferenceSeasonCount = 21;

inline constexpr std::array<SeasonValue, kReferenceSeasonCount> kReferenceCb1A = {{
    {2003, 0.283710492057469},
    {2004, 0.322395232984772},
    {2005, 0.417435545955688},
    {2006, 0.337471754696038},
    {2007, 0.419331606774874},
    {2008, 0.459135051038576},
    {2009, 0.434908310815382},
    {2010, 0.413231567489708},
    {2011, 0.426852549393698},
    {2012, 0.391918184090656},
    {2013, 0.411577365228621},
    {2014, 0.488245487093441},
    {2015, 0.461394017994427},
    {2016, 0.417641744994786},
    {2017, 0.461579405735787},
    {2018, 0.397559412091651},
    {2019, 0.38885569833192},
    {2020, 0.41598206351716},
    {2021, 0.406122790968469},
    {2022, 0.386253962137401},
    {2023, 0.351822524355051},
}};

inline constexpr std::array<SeasonValue, kReferenceSeasonCount> kReferenceCb2A = {{
    {2003, 0.252685084229457},
    {2004, 0.240113297385791},
    {2005, 0.349653783148035},
    {2006, 0.313759115600547},
    {2007, 0.354844732474096},
    {2008, 0.385735050071426},
    {2009, 0.30315093329707},
    {2010, 0.366295189246344},
    {2011, 0.321708291000443},
    {2012, 0.279763058286936},
    {2013, 0.375906626163598},
    {2014, 0.395420250491238},
    {2015, 0.333757293548977},
    {2016, 0.333106140352104},
    {2017, 0.357293498122064},
    {2018, 0.341036773697465},
    {2019, 0.333709015993894},
    {2020, 0.351170103827152},
    {2021, 0.310597443539946},
    {2022, 0.297383807009441},
    {2023, 0.327010697669181},
}};

inline constexpr std::array<SeasonValue, kReferenceSeasonCount> kReferenceCb1P = {{
    {2003, 0.416666666666667},
    {2004, 0.25},
    {2005, 0.458333333333333},
    {2006, 0.791666666666667},
    {2007, 0.541666666666667},
    {2008, 0.458333333333333},
    {2009, 0.5},
    {2010, 0.625},
    {2011, 0.458333333333333},
    {2012, 0.25},
    {2013, 0.541666666666667},
    {2014, 0.625},
    {2015, 0.583333333333333},
    {2016, 0.416666666666667},
    {2017, 0.208333333333333},
    {2018, 0.583333333333333},
    {2019, 0.583333333333333},
    {2020, 0.625},
    {2021, 0.625},
    {2022, 0.5},
    {2023, 0.416666666666667},
}};

inline constexpr std::array<SeasonValue, kReferenceSeasonCount> kReferenceCb2P = {{
    {2003, 0.4},
    {2004, 0.4},
    {2005, 0.45},
    {2006, 0.9},
    {2007, 0.55},
    {2008, 0.6},
    {2009, 0.55},
    {2010, 0.75},
    {2011, 0.4},
    {2012, 0.35},
    {2013, 0.5},
    {2014, 0.65},
    {2015, 0.7},
    {2016, 0.55},
    {2017, 0.4},
    {2018, 0.55},
    {2019, 0.6},
    {2020, 0.65},
    {2021, 0.8},
    {2022, 0.6},
    {2023, 0.45},
}};

inline constexpr std::array<SeasonValue, kReferenceSeasonCount> kReferenceCb3P = {{
    {2003, 0.375},
    {2004, 0.416666666666667},
    {2005, 0.583333333333333},
    {2006, 0.791666666666667},
    {2007, 0.583333333333333},
    {2008, 0.625},
    {2009, 0.541666666666667},
    {2010, 0.625},
    {2011, 0.333333333333333},
    {2012, 0.291666666666667},
    {2013, 0.708333333333333},
    {2014, 0.625},
    {2015, 0.666666666666667},
    {2016, 0.458333333333333},
    {2017, 0.333333333333333},
    {2018, 0.666666666666667},
    {2019, 0.75},
    {2020, 0.666666666666667},
    {2021, 0.5},
    {2022, 0.5},
    {2023, 0.5},
}};

inline constexpr std::array<SeasonValue, kReferenceSeasonCount> kReferenceCb4P = {{
    {2003, 0.35},
    {2004, 0.5},
    {2005, 0.6},
    {2006, 0.8},
    {2007, 0.55},
    {2008, 0.8},
    {2009, 0.55},
    {2010, 0.7},
    {2011, 0.25},
    {2012, 0.4},
    {2013, 0.65},
    {2014, 0.6},
    {2015, 0.6},
    {2016, 0.6},
    {2017, 0.4},
    {2018, 0.7},
    {2019, 0.85},
    {2020, 0.7},
    {2021, 0.5},
    {2022, 0.5},
    {2023, 0.45},
}};

/// The bundled seasonal series of one measure.
inline std::span<const SeasonValue> reference_series(Measure measure) {
    switch (measure) {
        case Measure::Cb1A: return kReferenceCb1A;
        case Measure::Cb2A: return kReferenceCb2A;
        case Measure::Cb1P: return kReferenceCb1P;
        case Measure::Cb2P: return kReferenceCb2P;
        case Measure::Cb3P: return kReferenceCb3P;
        case Measure::Cb4P: return kReferenceCb4P;
    }
    throw DomainError("reference_series: unknown measure");
}

inline IndexSeries reference_index_series(Measure measure) {
    const auto points = reference_series(measure);
    return IndexSeries{measure, {points.begin(), points.end()}};
}

}  // namespace groupcb
