// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

#![no_main]

use balanced_intervals::formats::parse_matrix;
use balanced_intervals::k_color::{color_hypergraph, column_spread};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(matrix) = parse_matrix(text) else {
        return;
    };
    for k in 1..=3 {
        if let Ok(coloring) = color_hypergraph(&matrix, k) {
            assert!(column_spread(&matrix, &coloring, k).unwrap() <= 1);
        }
    }
});
