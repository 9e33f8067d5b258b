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

use balanced_intervals::arcs::{arc_color, arc_imbalance};
use balanced_intervals::formats::parse_arcs_json;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(arcs) = parse_arcs_json(text) {
        if arcs.len() <= 32 && arcs.k() <= 8 {
            let coloring = arc_color(&arcs).unwrap();
            assert!(arc_imbalance(&arcs, &coloring).unwrap().value <= 2);
        }
    }
});
