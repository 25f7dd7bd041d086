// Copyright 2026 The Volbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Embedded copy of data/algorithms.csv; a unit test keeps the two in sync.

#include "volbench/survey.hpp"

namespace volbench {

const std::string &builtin_dataset_csv() {
    static const std::string csv = R"csv(# Survey dataset: 58 algorithm records synthesized to reproduce the published
# aggregate tables exactly (class-by-scaling counts before and after the
# overhead adjustment, adjustment counts, estimate-type marginals 14/19/25,
# and application-area marginals 24/14/16/6/3/2 with machine-learning and
# optimization overlapping on 7 records).  Per-record rows are one consistent
# assignment; they do not identify specific published algorithms.
id,poly_degree,polylog_degree,estimate_type,era,application_areas
A01,0,0,gate-count,NISQ,machine-learning
A02,0,0,runtime,NISQ,machine-learning
A03,0,1,gate-count,NISQ,machine-learning
A04,0,1,gate-count,NISQ,machine-learning
A05,0,1,gate-depth,NISQ,optimization
A06,0,1,gate-depth,NISQ,optimization
A07,0,1,gate-depth,FT,machine-learning
A08,0,1,runtime,FT,machine-learning
A09,0,1,runtime,FT,quantum-data-hiding
A10,0,1,runtime,FT,many-body-physics-chemistry
A11,0,2,gate-count,NISQ,machine-learning
A12,0,2,gate-count,NISQ,machine-learning
A13,0,2,gate-depth,NISQ,many-body-physics-chemistry
A14,0,2,gate-depth,FT,machine-learning
A15,0,2,runtime,FT,machine-learning
A16,0,2,runtime,FT,quantum-data-hiding
A17,1/2,2,gate-depth,FT,machine-learning
A18,1,0,gate-count,NISQ,machine-learning;optimization
A19,1,0,gate-count,NISQ,machine-learning
A20,1,0,gate-count,FT,machine-learning
A21,1,0,gate-count,FT,quantum-data-hiding
A22,1,0,gate-depth,NISQ,machine-learning;optimization
A23,1,0,gate-depth,NISQ,machine-learning
A24,1,0,gate-depth,NISQ,optimization
A25,1,0,gate-depth,NISQ,many-body-physics-chemistry
A26,1,0,gate-depth,FT,machine-learning;optimization
A27,1,0,runtime,NISQ,machine-learning
A28,1,0,runtime,NISQ,optimization
A29,1,0,runtime,NISQ,optimization
A30,1,0,runtime,NISQ,many-body-physics-chemistry
A31,1,0,runtime,FT,machine-learning;optimization
A32,1,0,runtime,FT,machine-learning
A33,1,0,runtime,FT,many-body-physics-chemistry
A34,1,2,gate-count,NISQ,many-body-physics-chemistry
A35,1,2,runtime,FT,machine-learning
A36,2,0,gate-count,NISQ,optimization
A37,2,0,gate-count,NISQ,many-body-physics-chemistry
A38,2,0,gate-count,FT,quantum-data-hiding
A39,2,0,gate-count,FT,many-body-physics-chemistry
A40,2,0,gate-depth,NISQ,optimization
A41,2,0,gate-depth,NISQ,many-body-physics-chemistry
A42,2,0,runtime,NISQ,many-body-physics-chemistry
A43,2,0,runtime,FT,machine-learning;optimization
A44,2,0,runtime,FT,many-body-physics-chemistry
A45,2,0,runtime,FT,quantum-data-hiding
A46,2,2,runtime,FT,many-body-physics-chemistry
A47,3,0,gate-count,NISQ,many-body-physics-chemistry
A48,3,0,gate-count,NISQ,many-body-physics-chemistry
A49,3,0,gate-count,FT,quantum-data-hiding
A50,3,0,gate-count,FT,many-body-physics-chemistry
A51,3,0,gate-depth,FT,numerical-solvers
A52,3,0,runtime,FT,numerical-solvers
A53,3,0,runtime,FT,machine-learning;optimization
A54,3,0,runtime,FT,many-body-physics-chemistry
A55,3,1,runtime,FT,numerical-solvers
A56,3,1,runtime,FT,other
A57,5,0,gate-count,FT,machine-learning;optimization
A58,5,0,runtime,FT,other
)csv";
    return csv;
}

} // namespace volbench
