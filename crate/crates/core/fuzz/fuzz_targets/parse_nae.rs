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

use balanced_intervals::formats::{nae_to_text, parse_nae};
use balanced_intervals::hardness::{audit_reduction, reduce_nae_to_boxes};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(formula) = parse_nae(text) else {
        return;
    };
    assert_eq!(parse_nae(&nae_to_text(&formula)).unwrap(), formula);
    if formula.clauses().len() <= 4 && formula.num_vars() <= 64 {
        audit_reduction(&reduce_nae_to_boxes(&formula, 2).unwrap()).unwrap();
    }
});
