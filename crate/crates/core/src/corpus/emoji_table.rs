// @generated by tools/gen_emoji_table.py — do not edit by hand.

/// Codepoint-to-folded-name table for the emoji blocks handled by
/// `clean_text`. Sorted by codepoint for binary search.
pub(crate) static EMOJI_NAMES: &[(u32, &str)] = &[
    (0x2600, "black_sun_with_rays"),
    (0x2601, "cloud"),
    (0x2602, "umbrella"),
    (0x2603, "snowman"),
    (0x2604, "comet"),
    (0x2605, "black_star"),
    (0x2606, "white_star"),
    (0x2607, "lightning"),
    (0x2608, "thunderstorm"),
    (0x2609, "sun"),
    (0x260A, "ascending_node"),
    (0x260B, "descending_node"),
    (0x260C, "conjunction"),
    (0x260D, "opposition"),
    (0x260E, "black_telephone"),
    (0x260F, "white_telephone"),
    (0x2610, "ballot_box"),
    (0x2611, "ballot_box_with_check"),
    (0x2612, "ballot_box_with_x"),
    (0x2613, "saltire"),
    (0x2614, "umbrella_with_rain_drops"),
    (0x2615, "hot_beverage"),
    (0x2616, "white_shogi_piece"),
    (0x2617, "black_shogi_piece"),
    (0x2618, "shamrock"),
    (0x2619, "reversed_rotated_floral_heart_bullet"),
    (0x261A, "black_left_pointing_index"),
    (0x261B, "black_right_pointing_index"),
    (0x261C, "white_left_pointing_index"),
    (0x261D, "white_up_pointing_index"),
    (0x261E, "white_right_pointing_index"),
    (0x261F, "white_down_pointing_index"),
    (0x2620, "skull_and_crossbones"),
    (0x2621, "caution_sign"),
    (0x2622, "radioactive_sign"),
    (0x2623, "biohazard_sign"),
    (0x2624, "caduceus"),
    (0x2625, "ankh"),
    (0x2626, "orthodox_cross"),
    (0x2627, "chi_rho"),
    (0x2628, "cross_of_lorraine"),
    (0x2629, "cross_of_jerusalem"),
    (0x262A, "star_and_crescent"),
    (0x262B, "farsi_symbol"),
    (0x262C, "adi_shakti"),
    (0x262D, "hammer_and_sickle"),
    (0x262E, "peace_symbol"),
    (0x262F, "yin_yang"),
    (0x2630, "trigram_for_heaven"),
    (0x2631, "trigram_for_lake"),
    (0x2632, "trigram_for_fire"),
    (0x2633, "trigram_for_thunder"),
    (0x2634, "trigram_for_wind"),
    (0x2635, "trigram_for_water"),
    (0x2636, "trigram_for_mountain"),
    (0x2637, "trigram_for_earth"),
    (0x2638, "wheel_of_dharma"),
    (0x2639, "white_frowning_face"),
    (0x263A, "white_smiling_face"),
    (0x263B, "black_smiling_face"),
    (0x263C, "white_sun_with_rays"),
    (0x263D, "first_quarter_moon"),
    (0x263E, "last_quarter_moon"),
    (0x263F, "mercury"),
    (0x2640, "female_sign"),
    (0x2641, "earth"),
    (0x2642, "male_sign"),
    (0x2643, "jupiter"),
    (0x2644, "saturn"),
    (0x2645, "uranus"),
    (0x2646, "neptune"),
    (0x2647, "pluto"),
    (0x2648, "aries"),
    (0x2649, "taurus"),
    (0x264A, "gemini"),
    (0x264B, "cancer"),
    (0x264C, "leo"),
    (0x264D, "virgo"),
    (0x264E, "libra"),
    (0x264F, "scorpius"),
    (0x2650, "sagittarius"),
    (0x2651, "capricorn"),
    (0x2652, "aquarius"),
    (0x2653, "pisces"),
    (0x2654, "white_chess_king"),
    (0x2655, "white_chess_queen"),
    (0x2656, "white_chess_rook"),
    (0x2657, "white_chess_bishop"),
    (0x2658, "white_chess_knight"),
    (0x2659, "white_chess_pawn"),
    (0x265A, "black_chess_king"),
    (0x265B, "black_chess_queen"),
    (0x265C, "black_chess_rook"),
    (0x265D, "black_chess_bishop"),
    (0x265E, "black_chess_knight"),
    (0x265F, "black_chess_pawn"),
    (0x2660, "black_spade_suit"),
    (0x2661, "white_heart_suit"),
    (0x2662, "white_diamond_suit"),
    (0x2663, "black_club_suit"),
    (0x2664, "white_spade_suit"),
    (0x2665, "black_heart_suit"),
    (0x2666, "black_diamond_suit"),
    (0x2667, "white_club_suit"),
    (0x2668, "hot_springs"),
    (0x2669, "quarter_note"),
    (0x266A, "eighth_note"),
    (0x266B, "beamed_eighth_notes"),
    (0x266C, "beamed_sixteenth_notes"),
    (0x266D, "music_flat_sign"),
    (0x266E, "music_natural_sign"),
    (0x266F, "music_sharp_sign"),
    (0x2670, "west_syriac_cross"),
    (0x2671, "east_syriac_cross"),
    (0x2672, "universal_recycling_symbol"),
    (0x2673, "recycling_symbol_for_type_plastics"),
    (0x2674, "recycling_symbol_for_type_plastics"),
    (0x2675, "recycling_symbol_for_type_plastics"),
    (0x2676, "recycling_symbol_for_type_plastics"),
    (0x2677, "recycling_symbol_for_type_plastics"),
    (0x2678, "recycling_symbol_for_type_plastics"),
    (0x2679, "recycling_symbol_for_type_plastics"),
    (0x267A, "recycling_symbol_for_generic_materials"),
    (0x267B, "black_universal_recycling_symbol"),
    (0x267C, "recycled_paper_symbol"),
    (0x267D, "partially_recycled_paper_symbol"),
    (0x267E, "permanent_paper_sign"),
    (0x267F, "wheelchair_symbol"),
    (0x2680, "die_face"),
    (0x2681, "die_face"),
    (0x2682, "die_face"),
    (0x2683, "die_face"),
    (0x2684, "die_face"),
    (0x2685, "die_face"),
    (0x2686, "white_circle_with_dot_right"),
    (0x2687, "white_circle_with_two_dots"),
    (0x2688, "black_circle_with_white_dot_right"),
    (0x2689, "black_circle_with_two_white_dots"),
    (0x268A, "monogram_for_yang"),
    (0x268B, "monogram_for_yin"),
    (0x268C, "digram_for_greater_yang"),
    (0x268D, "digram_for_lesser_yin"),
    (0x268E, "digram_for_lesser_yang"),
    (0x268F, "digram_for_greater_yin"),
    (0x2690, "white_flag"),
    (0x2691, "black_flag"),
    (0x2692, "hammer_and_pick"),
    (0x2693, "anchor"),
    (0x2694, "crossed_swords"),
    (0x2695, "staff_of_aesculapius"),
    (0x2696, "scales"),
    (0x2697, "alembic"),
    (0x2698, "flower"),
    (0x2699, "gear"),
    (0x269A, "staff_of_hermes"),
    (0x269B, "atom_symbol"),
    (0x269C, "fleur_de_lis"),
    (0x269D, "outlined_white_star"),
    (0x269E, "three_lines_converging_right"),
    (0x269F, "three_lines_converging_left"),
    (0x26A0, "warning_sign"),
    (0x26A1, "high_voltage_sign"),
    (0x26A2, "doubled_female_sign"),
    (0x26A3, "doubled_male_sign"),
    (0x26A4, "interlocked_female_and_male_sign"),
    (0x26A5, "male_and_female_sign"),
    (0x26A6, "male_with_stroke_sign"),
    (0x26A7, "male_with_stroke_and_male_and_female_sign"),
    (0x26A8, "vertical_male_with_stroke_sign"),
    (0x26A9, "horizontal_male_with_stroke_sign"),
    (0x26AA, "medium_white_circle"),
    (0x26AB, "medium_black_circle"),
    (0x26AC, "medium_small_white_circle"),
    (0x26AD, "marriage_symbol"),
    (0x26AE, "divorce_symbol"),
    (0x26AF, "unmarried_partnership_symbol"),
    (0x26B0, "coffin"),
    (0x26B1, "funeral_urn"),
    (0x26B2, "neuter"),
    (0x26B3, "ceres"),
    (0x26B4, "pallas"),
    (0x26B5, "juno"),
    (0x26B6, "vesta"),
    (0x26B7, "chiron"),
    (0x26B8, "black_moon_lilith"),
    (0x26B9, "sextile"),
    (0x26BA, "semisextile"),
    (0x26BB, "quincunx"),
    (0x26BC, "sesquiquadrate"),
    (0x26BD, "soccer_ball"),
    (0x26BE, "baseball"),
    (0x26BF, "squared_key"),
    (0x26C0, "white_draughts_man"),
    (0x26C1, "white_draughts_king"),
    (0x26C2, "black_draughts_man"),
    (0x26C3, "black_draughts_king"),
    (0x26C4, "snowman_without_snow"),
    (0x26C5, "sun_behind_cloud"),
    (0x26C6, "rain"),
    (0x26C7, "black_snowman"),
    (0x26C8, "thunder_cloud_and_rain"),
    (0x26C9, "turned_white_shogi_piece"),
    (0x26CA, "turned_black_shogi_piece"),
    (0x26CB, "white_diamond_in_square"),
    (0x26CC, "crossing_lanes"),
    (0x26CD, "disabled_car"),
    (0x26CE, "ophiuchus"),
    (0x26CF, "pick"),
    (0x26D0, "car_sliding"),
    (0x26D1, "helmet_with_white_cross"),
    (0x26D2, "circled_crossing_lanes"),
    (0x26D3, "chains"),
    (0x26D4, "no_entry"),
    (0x26D5, "alternate_one_way_left_way_traffic"),
    (0x26D6, "black_two_way_left_way_traffic"),
    (0x26D7, "white_two_way_left_way_traffic"),
    (0x26D8, "black_left_lane_merge"),
    (0x26D9, "white_left_lane_merge"),
    (0x26DA, "drive_slow_sign"),
    (0x26DB, "heavy_white_down_pointing_triangle"),
    (0x26DC, "left_closed_entry"),
    (0x26DD, "squared_saltire"),
    (0x26DE, "falling_diagonal_in_white_circle_in_black_square"),
    (0x26DF, "black_truck"),
    (0x26E0, "restricted_left_entry"),
    (0x26E1, "restricted_left_entry"),
    (0x26E2, "astronomical_symbol_for_uranus"),
    (0x26E3, "heavy_circle_with_stroke_and_two_dots_above"),
    (0x26E4, "pentagram"),
    (0x26E5, "right_handed_interlaced_pentagram"),
    (0x26E6, "left_handed_interlaced_pentagram"),
    (0x26E7, "inverted_pentagram"),
    (0x26E8, "black_cross_on_shield"),
    (0x26E9, "shinto_shrine"),
    (0x26EA, "church"),
    (0x26EB, "castle"),
    (0x26EC, "historic_site"),
    (0x26ED, "gear_without_hub"),
    (0x26EE, "gear_with_handles"),
    (0x26EF, "map_symbol_for_lighthouse"),
    (0x26F0, "mountain"),
    (0x26F1, "umbrella_on_ground"),
    (0x26F2, "fountain"),
    (0x26F3, "flag_in_hole"),
    (0x26F4, "ferry"),
    (0x26F5, "sailboat"),
    (0x26F6, "square_four_corners"),
    (0x26F7, "skier"),
    (0x26F8, "ice_skate"),
    (0x26F9, "person_with_ball"),
    (0x26FA, "tent"),
    (0x26FB, "japanese_bank_symbol"),
    (0x26FC, "headstone_graveyard_symbol"),
    (0x26FD, "fuel_pump"),
    (0x26FE, "cup_on_black_square"),
    (0x26FF, "white_flag_with_horizontal_middle_black_stripe"),
    (0x2700, "black_safety_scissors"),
    (0x2701, "upper_blade_scissors"),
    (0x2702, "black_scissors"),
    (0x2703, "lower_blade_scissors"),
    (0x2704, "white_scissors"),
    (0x2705, "white_heavy_check_mark"),
    (0x2706, "telephone_location_sign"),
    (0x2707, "tape_drive"),
    (0x2708, "airplane"),
    (0x2709, "envelope"),
    (0x270A, "raised_fist"),
    (0x270B, "raised_hand"),
    (0x270C, "victory_hand"),
    (0x270D, "writing_hand"),
    (0x270E, "lower_right_pencil"),
    (0x270F, "pencil"),
    (0x2710, "upper_right_pencil"),
    (0x2711, "white_nib"),
    (0x2712, "black_nib"),
    (0x2713, "check_mark"),
    (0x2714, "heavy_check_mark"),
    (0x2715, "multiplication_x"),
    (0x2716, "heavy_multiplication_x"),
    (0x2717, "ballot_x"),
    (0x2718, "heavy_ballot_x"),
    (0x2719, "outlined_greek_cross"),
    (0x271A, "heavy_greek_cross"),
    (0x271B, "open_centre_cross"),
    (0x271C, "heavy_open_centre_cross"),
    (0x271D, "latin_cross"),
    (0x271E, "shadowed_white_latin_cross"),
    (0x271F, "outlined_latin_cross"),
    (0x2720, "maltese_cross"),
    (0x2721, "star_of_david"),
    (0x2722, "four_teardrop_spoked_asterisk"),
    (0x2723, "four_balloon_spoked_asterisk"),
    (0x2724, "heavy_four_balloon_spoked_asterisk"),
    (0x2725, "four_club_spoked_asterisk"),
    (0x2726, "black_four_pointed_star"),
    (0x2727, "white_four_pointed_star"),
    (0x2728, "sparkles"),
    (0x2729, "stress_outlined_white_star"),
    (0x272A, "circled_white_star"),
    (0x272B, "open_centre_black_star"),
    (0x272C, "black_centre_white_star"),
    (0x272D, "outlined_black_star"),
    (0x272E, "heavy_outlined_black_star"),
    (0x272F, "pinwheel_star"),
    (0x2730, "shadowed_white_star"),
    (0x2731, "heavy_asterisk"),
    (0x2732, "open_centre_asterisk"),
    (0x2733, "eight_spoked_asterisk"),
    (0x2734, "eight_pointed_black_star"),
    (0x2735, "eight_pointed_pinwheel_star"),
    (0x2736, "six_pointed_black_star"),
    (0x2737, "eight_pointed_rectilinear_black_star"),
    (0x2738, "heavy_eight_pointed_rectilinear_black_star"),
    (0x2739, "twelve_pointed_black_star"),
    (0x273A, "sixteen_pointed_asterisk"),
    (0x273B, "teardrop_spoked_asterisk"),
    (0x273C, "open_centre_teardrop_spoked_asterisk"),
    (0x273D, "heavy_teardrop_spoked_asterisk"),
    (0x273E, "six_petalled_black_and_white_florette"),
    (0x273F, "black_florette"),
    (0x2740, "white_florette"),
    (0x2741, "eight_petalled_outlined_black_florette"),
    (0x2742, "circled_open_centre_eight_pointed_star"),
    (0x2743, "heavy_teardrop_spoked_pinwheel_asterisk"),
    (0x2744, "snowflake"),
    (0x2745, "tight_trifoliate_snowflake"),
    (0x2746, "heavy_chevron_snowflake"),
    (0x2747, "sparkle"),
    (0x2748, "heavy_sparkle"),
    (0x2749, "balloon_spoked_asterisk"),
    (0x274A, "eight_teardrop_spoked_propeller_asterisk"),
    (0x274B, "heavy_eight_teardrop_spoked_propeller_asterisk"),
    (0x274C, "cross_mark"),
    (0x274D, "shadowed_white_circle"),
    (0x274E, "negative_squared_cross_mark"),
    (0x274F, "lower_right_drop_shadowed_white_square"),
    (0x2750, "upper_right_drop_shadowed_white_square"),
    (0x2751, "lower_right_shadowed_white_square"),
    (0x2752, "upper_right_shadowed_white_square"),
    (0x2753, "black_question_mark_ornament"),
    (0x2754, "white_question_mark_ornament"),
    (0x2755, "white_exclamation_mark_ornament"),
    (0x2756, "black_diamond_minus_white_x"),
    (0x2757, "heavy_exclamation_mark_symbol"),
    (0x2758, "light_vertical_bar"),
    (0x2759, "medium_vertical_bar"),
    (0x275A, "heavy_vertical_bar"),
    (0x275B, "heavy_single_turned_comma_quotation_mark_ornament"),
    (0x275C, "heavy_single_comma_quotation_mark_ornament"),
    (0x275D, "heavy_double_turned_comma_quotation_mark_ornament"),
    (0x275E, "heavy_double_comma_quotation_mark_ornament"),
    (0x275F, "heavy_low_single_comma_quotation_mark_ornament"),
    (0x2760, "heavy_low_double_comma_quotation_mark_ornament"),
    (0x2761, "curved_stem_paragraph_sign_ornament"),
    (0x2762, "heavy_exclamation_mark_ornament"),
    (0x2763, "heavy_heart_exclamation_mark_ornament"),
    (0x2764, "heavy_black_heart"),
    (0x2765, "rotated_heavy_black_heart_bullet"),
    (0x2766, "floral_heart"),
    (0x2767, "rotated_floral_heart_bullet"),
    (0x2768, "medium_left_parenthesis_ornament"),
    (0x2769, "medium_right_parenthesis_ornament"),
    (0x276A, "medium_flattened_left_parenthesis_ornament"),
    (0x276B, "medium_flattened_right_parenthesis_ornament"),
    (0x276C, "medium_left_pointing_angle_bracket_ornament"),
    (0x276D, "medium_right_pointing_angle_bracket_ornament"),
    (0x276E, "heavy_left_pointing_angle_quotation_mark_ornament"),
    (0x276F, "heavy_right_pointing_angle_quotation_mark_ornament"),
    (0x2770, "heavy_left_pointing_angle_bracket_ornament"),
    (0x2771, "heavy_right_pointing_angle_bracket_ornament"),
    (0x2772, "light_left_tortoise_shell_bracket_ornament"),
    (0x2773, "light_right_tortoise_shell_bracket_ornament"),
    (0x2774, "medium_left_curly_bracket_ornament"),
    (0x2775, "medium_right_curly_bracket_ornament"),
    (0x2776, "dingbat_negative_circled_digit_one"),
    (0x2777, "dingbat_negative_circled_digit_two"),
    (0x2778, "dingbat_negative_circled_digit_three"),
    (0x2779, "dingbat_negative_circled_digit_four"),
    (0x277A, "dingbat_negative_circled_digit_five"),
    (0x277B, "dingbat_negative_circled_digit_six"),
    (0x277C, "dingbat_negative_circled_digit_seven"),
    (0x277D, "dingbat_negative_circled_digit_eight"),
    (0x277E, "dingbat_negative_circled_digit_nine"),
    (0x277F, "dingbat_negative_circled_number_ten"),
    (0x2780, "dingbat_circled_sans_serif_digit_one"),
    (0x2781, "dingbat_circled_sans_serif_digit_two"),
    (0x2782, "dingbat_circled_sans_serif_digit_three"),
    (0x2783, "dingbat_circled_sans_serif_digit_four"),
    (0x2784, "dingbat_circled_sans_serif_digit_five"),
    (0x2785, "dingbat_circled_sans_serif_digit_six"),
    (0x2786, "dingbat_circled_sans_serif_digit_seven"),
    (0x2787, "dingbat_circled_sans_serif_digit_eight"),
    (0x2788, "dingbat_circled_sans_serif_digit_nine"),
    (0x2789, "dingbat_circled_sans_serif_number_ten"),
    (0x278A, "dingbat_negative_circled_sans_serif_digit_one"),
    (0x278B, "dingbat_negative_circled_sans_serif_digit_two"),
    (0x278C, "dingbat_negative_circled_sans_serif_digit_three"),
    (0x278D, "dingbat_negative_circled_sans_serif_digit_four"),
    (0x278E, "dingbat_negative_circled_sans_serif_digit_five"),
    (0x278F, "dingbat_negative_circled_sans_serif_digit_six"),
    (0x2790, "dingbat_negative_circled_sans_serif_digit_seven"),
    (0x2791, "dingbat_negative_circled_sans_serif_digit_eight"),
    (0x2792, "dingbat_negative_circled_sans_serif_digit_nine"),
    (0x2793, "dingbat_negative_circled_sans_serif_number_ten"),
    (0x2794, "heavy_wide_headed_rightwards_arrow"),
    (0x2795, "heavy_plus_sign"),
    (0x2796, "heavy_minus_sign"),
    (0x2797, "heavy_division_sign"),
    (0x2798, "heavy_south_east_arrow"),
    (0x2799, "heavy_rightwards_arrow"),
    (0x279A, "heavy_north_east_arrow"),
    (0x279B, "drafting_point_rightwards_arrow"),
    (0x279C, "heavy_round_tipped_rightwards_arrow"),
    (0x279D, "triangle_headed_rightwards_arrow"),
    (0x279E, "heavy_triangle_headed_rightwards_arrow"),
    (0x279F, "dashed_triangle_headed_rightwards_arrow"),
    (0x27A0, "heavy_dashed_triangle_headed_rightwards_arrow"),
    (0x27A1, "black_rightwards_arrow"),
    (0x27A2, "three_d_top_lighted_rightwards_arrowhead"),
    (0x27A3, "three_d_bottom_lighted_rightwards_arrowhead"),
    (0x27A4, "black_rightwards_arrowhead"),
    (0x27A5, "heavy_black_curved_downwards_and_rightwards_arrow"),
    (0x27A6, "heavy_black_curved_upwards_and_rightwards_arrow"),
    (0x27A7, "squat_black_rightwards_arrow"),
    (0x27A8, "heavy_concave_pointed_black_rightwards_arrow"),
    (0x27A9, "right_shaded_white_rightwards_arrow"),
    (0x27AA, "left_shaded_white_rightwards_arrow"),
    (0x27AB, "back_tilted_shadowed_white_rightwards_arrow"),
    (0x27AC, "front_tilted_shadowed_white_rightwards_arrow"),
    (0x27AD, "heavy_lower_right_shadowed_white_rightwards_arrow"),
    (0x27AE, "heavy_upper_right_shadowed_white_rightwards_arrow"),
    (0x27AF, "notched_lower_right_shadowed_white_rightwards_arrow"),
    (0x27B0, "curly_loop"),
    (0x27B1, "notched_upper_right_shadowed_white_rightwards_arrow"),
    (0x27B2, "circled_heavy_white_rightwards_arrow"),
    (0x27B3, "white_feathered_rightwards_arrow"),
    (0x27B4, "black_feathered_south_east_arrow"),
    (0x27B5, "black_feathered_rightwards_arrow"),
    (0x27B6, "black_feathered_north_east_arrow"),
    (0x27B7, "heavy_black_feathered_south_east_arrow"),
    (0x27B8, "heavy_black_feathered_rightwards_arrow"),
    (0x27B9, "heavy_black_feathered_north_east_arrow"),
    (0x27BA, "teardrop_barbed_rightwards_arrow"),
    (0x27BB, "heavy_teardrop_shanked_rightwards_arrow"),
    (0x27BC, "wedge_tailed_rightwards_arrow"),
    (0x27BD, "heavy_wedge_tailed_rightwards_arrow"),
    (0x27BE, "open_outlined_rightwards_arrow"),
    (0x27BF, "double_curly_loop"),
    (0x2B00, "north_east_white_arrow"),
    (0x2B01, "north_west_white_arrow"),
    (0x2B02, "south_east_white_arrow"),
    (0x2B03, "south_west_white_arrow"),
    (0x2B04, "left_right_white_arrow"),
    (0x2B05, "leftwards_black_arrow"),
    (0x2B06, "upwards_black_arrow"),
    (0x2B07, "downwards_black_arrow"),
    (0x2B08, "north_east_black_arrow"),
    (0x2B09, "north_west_black_arrow"),
    (0x2B0A, "south_east_black_arrow"),
    (0x2B0B, "south_west_black_arrow"),
    (0x2B0C, "left_right_black_arrow"),
    (0x2B0D, "up_down_black_arrow"),
    (0x2B0E, "rightwards_arrow_with_tip_downwards"),
    (0x2B0F, "rightwards_arrow_with_tip_upwards"),
    (0x2B10, "leftwards_arrow_with_tip_downwards"),
    (0x2B11, "leftwards_arrow_with_tip_upwards"),
    (0x2B12, "square_with_top_half_black"),
    (0x2B13, "square_with_bottom_half_black"),
    (0x2B14, "square_with_upper_right_diagonal_half_black"),
    (0x2B15, "square_with_lower_left_diagonal_half_black"),
    (0x2B16, "diamond_with_left_half_black"),
    (0x2B17, "diamond_with_right_half_black"),
    (0x2B18, "diamond_with_top_half_black"),
    (0x2B19, "diamond_with_bottom_half_black"),
    (0x2B1A, "dotted_square"),
    (0x2B1B, "black_large_square"),
    (0x2B1C, "white_large_square"),
    (0x2B1D, "black_very_small_square"),
    (0x2B1E, "white_very_small_square"),
    (0x2B1F, "black_pentagon"),
    (0x2B20, "white_pentagon"),
    (0x2B21, "white_hexagon"),
    (0x2B22, "black_hexagon"),
    (0x2B23, "horizontal_black_hexagon"),
    (0x2B24, "black_large_circle"),
    (0x2B25, "black_medium_diamond"),
    (0x2B26, "white_medium_diamond"),
    (0x2B27, "black_medium_lozenge"),
    (0x2B28, "white_medium_lozenge"),
    (0x2B29, "black_small_diamond"),
    (0x2B2A, "black_small_lozenge"),
    (0x2B2B, "white_small_lozenge"),
    (0x2B2C, "black_horizontal_ellipse"),
    (0x2B2D, "white_horizontal_ellipse"),
    (0x2B2E, "black_vertical_ellipse"),
    (0x2B2F, "white_vertical_ellipse"),
    (0x2B30, "left_arrow_with_small_circle"),
    (0x2B31, "three_leftwards_arrows"),
    (0x2B32, "left_arrow_with_circled_plus"),
    (0x2B33, "long_leftwards_squiggle_arrow"),
    (0x2B34, "leftwards_two_headed_arrow_with_vertical_stroke"),
    (0x2B35, "leftwards_two_headed_arrow_with_double_vertical_stroke"),
    (0x2B36, "leftwards_two_headed_arrow_from_bar"),
    (0x2B37, "leftwards_two_headed_triple_dash_arrow"),
    (0x2B38, "leftwards_arrow_with_dotted_stem"),
    (0x2B39, "leftwards_arrow_with_tail_with_vertical_stroke"),
    (0x2B3A, "leftwards_arrow_with_tail_with_double_vertical_stroke"),
    (0x2B3B, "leftwards_two_headed_arrow_with_tail"),
    (0x2B3C, "leftwards_two_headed_arrow_with_tail_with_vertical_stroke"),
    (0x2B3D, "leftwards_two_headed_arrow_with_tail_with_double_vertical_stroke"),
    (0x2B3E, "leftwards_arrow_through_x"),
    (0x2B3F, "wave_arrow_pointing_directly_left"),
    (0x2B40, "equals_sign_above_leftwards_arrow"),
    (0x2B41, "reverse_tilde_operator_above_leftwards_arrow"),
    (0x2B42, "leftwards_arrow_above_reverse_almost_equal_to"),
    (0x2B43, "rightwards_arrow_through_greater_than"),
    (0x2B44, "rightwards_arrow_through_superset"),
    (0x2B45, "leftwards_quadruple_arrow"),
    (0x2B46, "rightwards_quadruple_arrow"),
    (0x2B47, "reverse_tilde_operator_above_rightwards_arrow"),
    (0x2B48, "rightwards_arrow_above_reverse_almost_equal_to"),
    (0x2B49, "tilde_operator_above_leftwards_arrow"),
    (0x2B4A, "leftwards_arrow_above_almost_equal_to"),
    (0x2B4B, "leftwards_arrow_above_reverse_tilde_operator"),
    (0x2B4C, "rightwards_arrow_above_reverse_tilde_operator"),
    (0x2B4D, "downwards_triangle_headed_zigzag_arrow"),
    (0x2B4E, "short_slanted_north_arrow"),
    (0x2B4F, "short_backslanted_south_arrow"),
    (0x2B50, "white_medium_star"),
    (0x2B51, "black_small_star"),
    (0x2B52, "white_small_star"),
    (0x2B53, "black_right_pointing_pentagon"),
    (0x2B54, "white_right_pointing_pentagon"),
    (0x2B55, "heavy_large_circle"),
    (0x2B56, "heavy_oval_with_oval_inside"),
    (0x2B57, "heavy_circle_with_circle_inside"),
    (0x2B58, "heavy_circle"),
    (0x2B59, "heavy_circled_saltire"),
    (0x2B5A, "slanted_north_arrow_with_hooked_head"),
    (0x2B5B, "backslanted_south_arrow_with_hooked_tail"),
    (0x2B5C, "slanted_north_arrow_with_horizontal_tail"),
    (0x2B5D, "backslanted_south_arrow_with_horizontal_tail"),
    (0x2B5E, "bent_arrow_pointing_downwards_then_north_east"),
    (0x2B5F, "short_bent_arrow_pointing_downwards_then_north_east"),
    (0x2B60, "leftwards_triangle_headed_arrow"),
    (0x2B61, "upwards_triangle_headed_arrow"),
    (0x2B62, "rightwards_triangle_headed_arrow"),
    (0x2B63, "downwards_triangle_headed_arrow"),
    (0x2B64, "left_right_triangle_headed_arrow"),
    (0x2B65, "up_down_triangle_headed_arrow"),
    (0x2B66, "north_west_triangle_headed_arrow"),
    (0x2B67, "north_east_triangle_headed_arrow"),
    (0x2B68, "south_east_triangle_headed_arrow"),
    (0x2B69, "south_west_triangle_headed_arrow"),
    (0x2B6A, "leftwards_triangle_headed_dashed_arrow"),
    (0x2B6B, "upwards_triangle_headed_dashed_arrow"),
    (0x2B6C, "rightwards_triangle_headed_dashed_arrow"),
    (0x2B6D, "downwards_triangle_headed_dashed_arrow"),
    (0x2B6E, "clockwise_triangle_headed_open_circle_arrow"),
    (0x2B6F, "anticlockwise_triangle_headed_open_circle_arrow"),
    (0x2B70, "leftwards_triangle_headed_arrow_to_bar"),
    (0x2B71, "upwards_triangle_headed_arrow_to_bar"),
    (0x2B72, "rightwards_triangle_headed_arrow_to_bar"),
    (0x2B73, "downwards_triangle_headed_arrow_to_bar"),
    (0x2B76, "north_west_triangle_headed_arrow_to_bar"),
    (0x2B77, "north_east_triangle_headed_arrow_to_bar"),
    (0x2B78, "south_east_triangle_headed_arrow_to_bar"),
    (0x2B79, "south_west_triangle_headed_arrow_to_bar"),
    (0x2B7A, "leftwards_triangle_headed_arrow_with_double_horizontal_stroke"),
    (0x2B7B, "upwards_triangle_headed_arrow_with_double_horizontal_stroke"),
    (0x2B7C, "rightwards_triangle_headed_arrow_with_double_horizontal_stroke"),
    (0x2B7D, "downwards_triangle_headed_arrow_with_double_horizontal_stroke"),
    (0x2B7E, "horizontal_tab_key"),
    (0x2B7F, "vertical_tab_key"),
    (0x2B80, "leftwards_triangle_headed_arrow_over_rightwards_triangle_headed_arrow"),
    (0x2B81, "upwards_triangle_headed_arrow_leftwards_of_downwards_triangle_headed_arrow"),
    (0x2B82, "rightwards_triangle_headed_arrow_over_leftwards_triangle_headed_arrow"),
    (0x2B83, "downwards_triangle_headed_arrow_leftwards_of_upwards_triangle_headed_arrow"),
    (0x2B84, "leftwards_triangle_headed_paired_arrows"),
    (0x2B85, "upwards_triangle_headed_paired_arrows"),
    (0x2B86, "rightwards_triangle_headed_paired_arrows"),
    (0x2B87, "downwards_triangle_headed_paired_arrows"),
    (0x2B88, "leftwards_black_circled_white_arrow"),
    (0x2B89, "upwards_black_circled_white_arrow"),
    (0x2B8A, "rightwards_black_circled_white_arrow"),
    (0x2B8B, "downwards_black_circled_white_arrow"),
    (0x2B8C, "anticlockwise_triangle_headed_right_u_shaped_arrow"),
    (0x2B8D, "anticlockwise_triangle_headed_bottom_u_shaped_arrow"),
    (0x2B8E, "anticlockwise_triangle_headed_left_u_shaped_arrow"),
    (0x2B8F, "anticlockwise_triangle_headed_top_u_shaped_arrow"),
    (0x2B90, "return_left"),
    (0x2B91, "return_right"),
    (0x2B92, "newline_left"),
    (0x2B93, "newline_right"),
    (0x2B94, "four_corner_arrows_circling_anticlockwise"),
    (0x2B95, "rightwards_black_arrow"),
    (0x2B97, "symbol_for_type_a_electronics"),
    (0x2B98, "three_d_top_lighted_leftwards_equilateral_arrowhead"),
    (0x2B99, "three_d_right_lighted_upwards_equilateral_arrowhead"),
    (0x2B9A, "three_d_top_lighted_rightwards_equilateral_arrowhead"),
    (0x2B9B, "three_d_left_lighted_downwards_equilateral_arrowhead"),
    (0x2B9C, "black_leftwards_equilateral_arrowhead"),
    (0x2B9D, "black_upwards_equilateral_arrowhead"),
    (0x2B9E, "black_rightwards_equilateral_arrowhead"),
    (0x2B9F, "black_downwards_equilateral_arrowhead"),
    (0x2BA0, "downwards_triangle_headed_arrow_with_long_tip_leftwards"),
    (0x2BA1, "downwards_triangle_headed_arrow_with_long_tip_rightwards"),
    (0x2BA2, "upwards_triangle_headed_arrow_with_long_tip_leftwards"),
    (0x2BA3, "upwards_triangle_headed_arrow_with_long_tip_rightwards"),
    (0x2BA4, "leftwards_triangle_headed_arrow_with_long_tip_upwards"),
    (0x2BA5, "rightwards_triangle_headed_arrow_with_long_tip_upwards"),
    (0x2BA6, "leftwards_triangle_headed_arrow_with_long_tip_downwards"),
    (0x2BA7, "rightwards_triangle_headed_arrow_with_long_tip_downwards"),
    (0x2BA8, "black_curved_downwards_and_leftwards_arrow"),
    (0x2BA9, "black_curved_downwards_and_rightwards_arrow"),
    (0x2BAA, "black_curved_upwards_and_leftwards_arrow"),
    (0x2BAB, "black_curved_upwards_and_rightwards_arrow"),
    (0x2BAC, "black_curved_leftwards_and_upwards_arrow"),
    (0x2BAD, "black_curved_rightwards_and_upwards_arrow"),
    (0x2BAE, "black_curved_leftwards_and_downwards_arrow"),
    (0x2BAF, "black_curved_rightwards_and_downwards_arrow"),
    (0x2BB0, "ribbon_arrow_down_left"),
    (0x2BB1, "ribbon_arrow_down_right"),
    (0x2BB2, "ribbon_arrow_up_left"),
    (0x2BB3, "ribbon_arrow_up_right"),
    (0x2BB4, "ribbon_arrow_left_up"),
    (0x2BB5, "ribbon_arrow_right_up"),
    (0x2BB6, "ribbon_arrow_left_down"),
    (0x2BB7, "ribbon_arrow_right_down"),
    (0x2BB8, "upwards_white_arrow_from_bar_with_horizontal_bar"),
    (0x2BB9, "up_arrowhead_in_a_rectangle_box"),
    (0x2BBA, "overlapping_white_squares"),
    (0x2BBB, "overlapping_white_and_black_squares"),
    (0x2BBC, "overlapping_black_squares"),
    (0x2BBD, "ballot_box_with_light_x"),
    (0x2BBE, "circled_x"),
    (0x2BBF, "circled_bold_x"),
    (0x2BC0, "black_square_centred"),
    (0x2BC1, "black_diamond_centred"),
    (0x2BC2, "turned_black_pentagon"),
    (0x2BC3, "horizontal_black_octagon"),
    (0x2BC4, "black_octagon"),
    (0x2BC5, "black_medium_up_pointing_triangle_centred"),
    (0x2BC6, "black_medium_down_pointing_triangle_centred"),
    (0x2BC7, "black_medium_left_pointing_triangle_centred"),
    (0x2BC8, "black_medium_right_pointing_triangle_centred"),
    (0x2BC9, "neptune_form_two"),
    (0x2BCA, "top_half_black_circle"),
    (0x2BCB, "bottom_half_black_circle"),
    (0x2BCC, "light_four_pointed_black_cusp"),
    (0x2BCD, "rotated_light_four_pointed_black_cusp"),
    (0x2BCE, "white_four_pointed_cusp"),
    (0x2BCF, "rotated_white_four_pointed_cusp"),
    (0x2BD0, "square_position_indicator"),
    (0x2BD1, "uncertainty_sign"),
    (0x2BD2, "group_mark"),
    (0x2BD3, "pluto_form_two"),
    (0x2BD4, "pluto_form_three"),
    (0x2BD5, "pluto_form_four"),
    (0x2BD6, "pluto_form_five"),
    (0x2BD7, "transpluto"),
    (0x2BD8, "proserpina"),
    (0x2BD9, "astraea"),
    (0x2BDA, "hygiea"),
    (0x2BDB, "pholus"),
    (0x2BDC, "nessus"),
    (0x2BDD, "white_moon_selena"),
    (0x2BDE, "black_diamond_on_cross"),
    (0x2BDF, "true_light_moon_arta"),
    (0x2BE0, "cupido"),
    (0x2BE1, "hades"),
    (0x2BE2, "zeus"),
    (0x2BE3, "kronos"),
    (0x2BE4, "apollon"),
    (0x2BE5, "admetos"),
    (0x2BE6, "vulcanus"),
    (0x2BE7, "poseidon"),
    (0x2BE8, "left_half_black_star"),
    (0x2BE9, "right_half_black_star"),
    (0x2BEA, "star_with_left_half_black"),
    (0x2BEB, "star_with_right_half_black"),
    (0x2BEC, "leftwards_two_headed_arrow_with_triangle_arrowheads"),
    (0x2BED, "upwards_two_headed_arrow_with_triangle_arrowheads"),
    (0x2BEE, "rightwards_two_headed_arrow_with_triangle_arrowheads"),
    (0x2BEF, "downwards_two_headed_arrow_with_triangle_arrowheads"),
    (0x2BF0, "eris_form_one"),
    (0x2BF1, "eris_form_two"),
    (0x2BF2, "sedna"),
    (0x2BF3, "russian_astrological_symbol_vigintile"),
    (0x2BF4, "russian_astrological_symbol_novile"),
    (0x2BF5, "russian_astrological_symbol_quintile"),
    (0x2BF6, "russian_astrological_symbol_binovile"),
    (0x2BF7, "russian_astrological_symbol_sentagon"),
    (0x2BF8, "russian_astrological_symbol_tredecile"),
    (0x2BF9, "equals_sign_with_infinity_below"),
    (0x2BFA, "united_symbol"),
    (0x2BFB, "separated_symbol"),
    (0x2BFC, "doubled_symbol"),
    (0x2BFD, "passed_symbol"),
    (0x2BFE, "reversed_right_angle"),
    (0x2BFF, "hellschreiber_pause_symbol"),
    (0x1F000, "mahjong_tile_east_wind"),
    (0x1F001, "mahjong_tile_south_wind"),
    (0x1F002, "mahjong_tile_west_wind"),
    (0x1F003, "mahjong_tile_north_wind"),
    (0x1F004, "mahjong_tile_red_dragon"),
    (0x1F005, "mahjong_tile_green_dragon"),
    (0x1F006, "mahjong_tile_white_dragon"),
    (0x1F007, "mahjong_tile_one_of_characters"),
    (0x1F008, "mahjong_tile_two_of_characters"),
    (0x1F009, "mahjong_tile_three_of_characters"),
    (0x1F00A, "mahjong_tile_four_of_characters"),
    (0x1F00B, "mahjong_tile_five_of_characters"),
    (0x1F00C, "mahjong_tile_six_of_characters"),
    (0x1F00D, "mahjong_tile_seven_of_characters"),
    (0x1F00E, "mahjong_tile_eight_of_characters"),
    (0x1F00F, "mahjong_tile_nine_of_characters"),
    (0x1F010, "mahjong_tile_one_of_bamboos"),
    (0x1F011, "mahjong_tile_two_of_bamboos"),
    (0x1F012, "mahjong_tile_three_of_bamboos"),
    (0x1F013, "mahjong_tile_four_of_bamboos"),
    (0x1F014, "mahjong_tile_five_of_bamboos"),
    (0x1F015, "mahjong_tile_six_of_bamboos"),
    (0x1F016, "mahjong_tile_seven_of_bamboos"),
    (0x1F017, "mahjong_tile_eight_of_bamboos"),
    (0x1F018, "mahjong_tile_nine_of_bamboos"),
    (0x1F019, "mahjong_tile_one_of_circles"),
    (0x1F01A, "mahjong_tile_two_of_circles"),
    (0x1F01B, "mahjong_tile_three_of_circles"),
    (0x1F01C, "mahjong_tile_four_of_circles"),
    (0x1F01D, "mahjong_tile_five_of_circles"),
    (0x1F01E, "mahjong_tile_six_of_circles"),
    (0x1F01F, "mahjong_tile_seven_of_circles"),
    (0x1F020, "mahjong_tile_eight_of_circles"),
    (0x1F021, "mahjong_tile_nine_of_circles"),
    (0x1F022, "mahjong_tile_plum"),
    (0x1F023, "mahjong_tile_orchid"),
    (0x1F024, "mahjong_tile_bamboo"),
    (0x1F025, "mahjong_tile_chrysanthemum"),
    (0x1F026, "mahjong_tile_spring"),
    (0x1F027, "mahjong_tile_summer"),
    (0x1F028, "mahjong_tile_autumn"),
    (0x1F029, "mahjong_tile_winter"),
    (0x1F02A, "mahjong_tile_joker"),
    (0x1F02B, "mahjong_tile_back"),
    (0x1F0A0, "playing_card_back"),
    (0x1F0A1, "playing_card_ace_of_spades"),
    (0x1F0A2, "playing_card_two_of_spades"),
    (0x1F0A3, "playing_card_three_of_spades"),
    (0x1F0A4, "playing_card_four_of_spades"),
    (0x1F0A5, "playing_card_five_of_spades"),
    (0x1F0A6, "playing_card_six_of_spades"),
    (0x1F0A7, "playing_card_seven_of_spades"),
    (0x1F0A8, "playing_card_eight_of_spades"),
    (0x1F0A9, "playing_card_nine_of_spades"),
    (0x1F0AA, "playing_card_ten_of_spades"),
    (0x1F0AB, "playing_card_jack_of_spades"),
    (0x1F0AC, "playing_card_knight_of_spades"),
    (0x1F0AD, "playing_card_queen_of_spades"),
    (0x1F0AE, "playing_card_king_of_spades"),
    (0x1F0B1, "playing_card_ace_of_hearts"),
    (0x1F0B2, "playing_card_two_of_hearts"),
    (0x1F0B3, "playing_card_three_of_hearts"),
    (0x1F0B4, "playing_card_four_of_hearts"),
    (0x1F0B5, "playing_card_five_of_hearts"),
    (0x1F0B6, "playing_card_six_of_hearts"),
    (0x1F0B7, "playing_card_seven_of_hearts"),
    (0x1F0B8, "playing_card_eight_of_hearts"),
    (0x1F0B9, "playing_card_nine_of_hearts"),
    (0x1F0BA, "playing_card_ten_of_hearts"),
    (0x1F0BB, "playing_card_jack_of_hearts"),
    (0x1F0BC, "playing_card_knight_of_hearts"),
    (0x1F0BD, "playing_card_queen_of_hearts"),
    (0x1F0BE, "playing_card_king_of_hearts"),
    (0x1F0BF, "playing_card_red_joker"),
    (0x1F0C1, "playing_card_ace_of_diamonds"),
    (0x1F0C2, "playing_card_two_of_diamonds"),
    (0x1F0C3, "playing_card_three_of_diamonds"),
    (0x1F0C4, "playing_card_four_of_diamonds"),
    (0x1F0C5, "playing_card_five_of_diamonds"),
    (0x1F0C6, "playing_card_six_of_diamonds"),
    (0x1F0C7, "playing_card_seven_of_diamonds"),
    (0x1F0C8, "playing_card_eight_of_diamonds"),
    (0x1F0C9, "playing_card_nine_of_diamonds"),
    (0x1F0CA, "playing_card_ten_of_diamonds"),
    (0x1F0CB, "playing_card_jack_of_diamonds"),
    (0x1F0CC, "playing_card_knight_of_diamonds"),
    (0x1F0CD, "playing_card_queen_of_diamonds"),
    (0x1F0CE, "playing_card_king_of_diamonds"),
    (0x1F0CF, "playing_card_black_joker"),
    (0x1F0D1, "playing_card_ace_of_clubs"),
    (0x1F0D2, "playing_card_two_of_clubs"),
    (0x1F0D3, "playing_card_three_of_clubs"),
    (0x1F0D4, "playing_card_four_of_clubs"),
    (0x1F0D5, "playing_card_five_of_clubs"),
    (0x1F0D6, "playing_card_six_of_clubs"),
    (0x1F0D7, "playing_card_seven_of_clubs"),
    (0x1F0D8, "playing_card_eight_of_clubs"),
    (0x1F0D9, "playing_card_nine_of_clubs"),
    (0x1F0DA, "playing_card_ten_of_clubs"),
    (0x1F0DB, "playing_card_jack_of_clubs"),
    (0x1F0DC, "playing_card_knight_of_clubs"),
    (0x1F0DD, "playing_card_queen_of_clubs"),
    (0x1F0DE, "playing_card_king_of_clubs"),
    (0x1F0DF, "playing_card_white_joker"),
    (0x1F0E0, "playing_card_fool"),
    (0x1F0E1, "playing_card_trump"),
    (0x1F0E2, "playing_card_trump"),
    (0x1F0E3, "playing_card_trump"),
    (0x1F0E4, "playing_card_trump"),
    (0x1F0E5, "playing_card_trump"),
    (0x1F0E6, "playing_card_trump"),
    (0x1F0E7, "playing_card_trump"),
    (0x1F0E8, "playing_card_trump"),
    (0x1F0E9, "playing_card_trump"),
    (0x1F0EA, "playing_card_trump"),
    (0x1F0EB, "playing_card_trump"),
    (0x1F0EC, "playing_card_trump"),
    (0x1F0ED, "playing_card_trump"),
    (0x1F0EE, "playing_card_trump"),
    (0x1F0EF, "playing_card_trump"),
    (0x1F0F0, "playing_card_trump"),
    (0x1F0F1, "playing_card_trump"),
    (0x1F0F2, "playing_card_trump"),
    (0x1F0F3, "playing_card_trump"),
    (0x1F0F4, "playing_card_trump"),
    (0x1F0F5, "playing_card_trump"),
    (0x1F100, "digit_zero_full_stop"),
    (0x1F101, "digit_zero_comma"),
    (0x1F102, "digit_one_comma"),
    (0x1F103, "digit_two_comma"),
    (0x1F104, "digit_three_comma"),
    (0x1F105, "digit_four_comma"),
    (0x1F106, "digit_five_comma"),
    (0x1F107, "digit_six_comma"),
    (0x1F108, "digit_seven_comma"),
    (0x1F109, "digit_eight_comma"),
    (0x1F10A, "digit_nine_comma"),
    (0x1F10B, "dingbat_circled_sans_serif_digit_zero"),
    (0x1F10C, "dingbat_negative_circled_sans_serif_digit_zero"),
    (0x1F10D, "circled_zero_with_slash"),
    (0x1F10E, "circled_anticlockwise_arrow"),
    (0x1F10F, "circled_dollar_sign_with_overlaid_backslash"),
    (0x1F110, "parenthesized_latin_capital_letter_a"),
    (0x1F111, "parenthesized_latin_capital_letter_b"),
    (0x1F112, "parenthesized_latin_capital_letter_c"),
    (0x1F113, "parenthesized_latin_capital_letter_d"),
    (0x1F114, "parenthesized_latin_capital_letter_e"),
    (0x1F115, "parenthesized_latin_capital_letter_f"),
    (0x1F116, "parenthesized_latin_capital_letter_g"),
    (0x1F117, "parenthesized_latin_capital_letter_h"),
    (0x1F118, "parenthesized_latin_capital_letter_i"),
    (0x1F119, "parenthesized_latin_capital_letter_j"),
    (0x1F11A, "parenthesized_latin_capital_letter_k"),
    (0x1F11B, "parenthesized_latin_capital_letter_l"),
    (0x1F11C, "parenthesized_latin_capital_letter_m"),
    (0x1F11D, "parenthesized_latin_capital_letter_n"),
    (0x1F11E, "parenthesized_latin_capital_letter_o"),
    (0x1F11F, "parenthesized_latin_capital_letter_p"),
    (0x1F120, "parenthesized_latin_capital_letter_q"),
    (0x1F121, "parenthesized_latin_capital_letter_r"),
    (0x1F122, "parenthesized_latin_capital_letter_s"),
    (0x1F123, "parenthesized_latin_capital_letter_t"),
    (0x1F124, "parenthesized_latin_capital_letter_u"),
    (0x1F125, "parenthesized_latin_capital_letter_v"),
    (0x1F126, "parenthesized_latin_capital_letter_w"),
    (0x1F127, "parenthesized_latin_capital_letter_x"),
    (0x1F128, "parenthesized_latin_capital_letter_y"),
    (0x1F129, "parenthesized_latin_capital_letter_z"),
    (0x1F12A, "tortoise_shell_bracketed_latin_capital_letter_s"),
    (0x1F12B, "circled_italic_latin_capital_letter_c"),
    (0x1F12C, "circled_italic_latin_capital_letter_r"),
    (0x1F12D, "circled_cd"),
    (0x1F12E, "circled_wz"),
    (0x1F12F, "copyleft_symbol"),
    (0x1F130, "squared_latin_capital_letter_a"),
    (0x1F131, "squared_latin_capital_letter_b"),
    (0x1F132, "squared_latin_capital_letter_c"),
    (0x1F133, "squared_latin_capital_letter_d"),
    (0x1F134, "squared_latin_capital_letter_e"),
    (0x1F135, "squared_latin_capital_letter_f"),
    (0x1F136, "squared_latin_capital_letter_g"),
    (0x1F137, "squared_latin_capital_letter_h"),
    (0x1F138, "squared_latin_capital_letter_i"),
    (0x1F139, "squared_latin_capital_letter_j"),
    (0x1F13A, "squared_latin_capital_letter_k"),
    (0x1F13B, "squared_latin_capital_letter_l"),
    (0x1F13C, "squared_latin_capital_letter_m"),
    (0x1F13D, "squared_latin_capital_letter_n"),
    (0x1F13E, "squared_latin_capital_letter_o"),
    (0x1F13F, "squared_latin_capital_letter_p"),
    (0x1F140, "squared_latin_capital_letter_q"),
    (0x1F141, "squared_latin_capital_letter_r"),
    (0x1F142, "squared_latin_capital_letter_s"),
    (0x1F143, "squared_latin_capital_letter_t"),
    (0x1F144, "squared_latin_capital_letter_u"),
    (0x1F145, "squared_latin_capital_letter_v"),
    (0x1F146, "squared_latin_capital_letter_w"),
    (0x1F147, "squared_latin_capital_letter_x"),
    (0x1F148, "squared_latin_capital_letter_y"),
    (0x1F149, "squared_latin_capital_letter_z"),
    (0x1F14A, "squared_hv"),
    (0x1F14B, "squared_mv"),
    (0x1F14C, "squared_sd"),
    (0x1F14D, "squared_ss"),
    (0x1F14E, "squared_ppv"),
    (0x1F14F, "squared_wc"),
    (0x1F150, "negative_circled_latin_capital_letter_a"),
    (0x1F151, "negative_circled_latin_capital_letter_b"),
    (0x1F152, "negative_circled_latin_capital_letter_c"),
    (0x1F153, "negative_circled_latin_capital_letter_d"),
    (0x1F154, "negative_circled_latin_capital_letter_e"),
    (0x1F155, "negative_circled_latin_capital_letter_f"),
    (0x1F156, "negative_circled_latin_capital_letter_g"),
    (0x1F157, "negative_circled_latin_capital_letter_h"),
    (0x1F158, "negative_circled_latin_capital_letter_i"),
    (0x1F159, "negative_circled_latin_capital_letter_j"),
    (0x1F15A, "negative_circled_latin_capital_letter_k"),
    (0x1F15B, "negative_circled_latin_capital_letter_l"),
    (0x1F15C, "negative_circled_latin_capital_letter_m"),
    (0x1F15D, "negative_circled_latin_capital_letter_n"),
    (0x1F15E, "negative_circled_latin_capital_letter_o"),
    (0x1F15F, "negative_circled_latin_capital_letter_p"),
    (0x1F160, "negative_circled_latin_capital_letter_q"),
    (0x1F161, "negative_circled_latin_capital_letter_r"),
    (0x1F162, "negative_circled_latin_capital_letter_s"),
    (0x1F163, "negative_circled_latin_capital_letter_t"),
    (0x1F164, "negative_circled_latin_capital_letter_u"),
    (0x1F165, "negative_circled_latin_capital_letter_v"),
    (0x1F166, "negative_circled_latin_capital_letter_w"),
    (0x1F167, "negative_circled_latin_capital_letter_x"),
    (0x1F168, "negative_circled_latin_capital_letter_y"),
    (0x1F169, "negative_circled_latin_capital_letter_z"),
    (0x1F16A, "raised_mc_sign"),
    (0x1F16B, "raised_md_sign"),
    (0x1F16C, "raised_mr_sign"),
    (0x1F16D, "circled_cc"),
    (0x1F16E, "circled_c_with_overlaid_backslash"),
    (0x1F16F, "circled_human_figure"),
    (0x1F170, "negative_squared_latin_capital_letter_a"),
    (0x1F171, "negative_squared_latin_capital_letter_b"),
    (0x1F172, "negative_squared_latin_capital_letter_c"),
    (0x1F173, "negative_squared_latin_capital_letter_d"),
    (0x1F174, "negative_squared_latin_capital_letter_e"),
    (0x1F175, "negative_squared_latin_capital_letter_f"),
    (0x1F176, "negative_squared_latin_capital_letter_g"),
    (0x1F177, "negative_squared_latin_capital_letter_h"),
    (0x1F178, "negative_squared_latin_capital_letter_i"),
    (0x1F179, "negative_squared_latin_capital_letter_j"),
    (0x1F17A, "negative_squared_latin_capital_letter_k"),
    (0x1F17B, "negative_squared_latin_capital_letter_l"),
    (0x1F17C, "negative_squared_latin_capital_letter_m"),
    (0x1F17D, "negative_squared_latin_capital_letter_n"),
    (0x1F17E, "negative_squared_latin_capital_letter_o"),
    (0x1F17F, "negative_squared_latin_capital_letter_p"),
    (0x1F180, "negative_squared_latin_capital_letter_q"),
    (0x1F181, "negative_squared_latin_capital_letter_r"),
    (0x1F182, "negative_squared_latin_capital_letter_s"),
    (0x1F183, "negative_squared_latin_capital_letter_t"),
    (0x1F184, "negative_squared_latin_capital_letter_u"),
    (0x1F185, "negative_squared_latin_capital_letter_v"),
    (0x1F186, "negative_squared_latin_capital_letter_w"),
    (0x1F187, "negative_squared_latin_capital_letter_x"),
    (0x1F188, "negative_squared_latin_capital_letter_y"),
    (0x1F189, "negative_squared_latin_capital_letter_z"),
    (0x1F18A, "crossed_negative_squared_latin_capital_letter_p"),
    (0x1F18B, "negative_squared_ic"),
    (0x1F18C, "negative_squared_pa"),
    (0x1F18D, "negative_squared_sa"),
    (0x1F18E, "negative_squared_ab"),
    (0x1F18F, "negative_squared_wc"),
    (0x1F190, "square_dj"),
    (0x1F191, "squared_cl"),
    (0x1F192, "squared_cool"),
    (0x1F193, "squared_free"),
    (0x1F194, "squared_id"),
    (0x1F195, "squared_new"),
    (0x1F196, "squared_ng"),
    (0x1F197, "squared_ok"),
    (0x1F198, "squared_sos"),
    (0x1F199, "squared_up_with_exclamation_mark"),
    (0x1F19A, "squared_vs"),
    (0x1F19B, "squared_three_d"),
    (0x1F19C, "squared_second_screen"),
    (0x1F19D, "squared_two_k"),
    (0x1F19E, "squared_four_k"),
    (0x1F19F, "squared_eight_k"),
    (0x1F1A0, "squared_five_point_one"),
    (0x1F1A1, "squared_seven_point_one"),
    (0x1F1A2, "squared_twenty_two_point_two"),
    (0x1F1A3, "squared_sixty_p"),
    (0x1F1A4, "squared_one_hundred_twenty_p"),
    (0x1F1A5, "squared_latin_small_letter_d"),
    (0x1F1A6, "squared_hc"),
    (0x1F1A7, "squared_hdr"),
    (0x1F1A8, "squared_hi_res"),
    (0x1F1A9, "squared_lossless"),
    (0x1F1AA, "squared_shv"),
    (0x1F1AB, "squared_uhd"),
    (0x1F1AC, "squared_vod"),
    (0x1F1AD, "mask_work_symbol"),
    (0x1F1E6, "regional_indicator_symbol_letter_a"),
    (0x1F1E7, "regional_indicator_symbol_letter_b"),
    (0x1F1E8, "regional_indicator_symbol_letter_c"),
    (0x1F1E9, "regional_indicator_symbol_letter_d"),
    (0x1F1EA, "regional_indicator_symbol_letter_e"),
    (0x1F1EB, "regional_indicator_symbol_letter_f"),
    (0x1F1EC, "regional_indicator_symbol_letter_g"),
    (0x1F1ED, "regional_indicator_symbol_letter_h"),
    (0x1F1EE, "regional_indicator_symbol_letter_i"),
    (0x1F1EF, "regional_indicator_symbol_letter_j"),
    (0x1F1F0, "regional_indicator_symbol_letter_k"),
    (0x1F1F1, "regional_indicator_symbol_letter_l"),
    (0x1F1F2, "regional_indicator_symbol_letter_m"),
    (0x1F1F3, "regional_indicator_symbol_letter_n"),
    (0x1F1F4, "regional_indicator_symbol_letter_o"),
    (0x1F1F5, "regional_indicator_symbol_letter_p"),
    (0x1F1F6, "regional_indicator_symbol_letter_q"),
    (0x1F1F7, "regional_indicator_symbol_letter_r"),
    (0x1F1F8, "regional_indicator_symbol_letter_s"),
    (0x1F1F9, "regional_indicator_symbol_letter_t"),
    (0x1F1FA, "regional_indicator_symbol_letter_u"),
    (0x1F1FB, "regional_indicator_symbol_letter_v"),
    (0x1F1FC, "regional_indicator_symbol_letter_w"),
    (0x1F1FD, "regional_indicator_symbol_letter_x"),
    (0x1F1FE, "regional_indicator_symbol_letter_y"),
    (0x1F1FF, "regional_indicator_symbol_letter_z"),
    (0x1F200, "square_hiragana_hoka"),
    (0x1F201, "squared_katakana_koko"),
    (0x1F202, "squared_katakana_sa"),
    (0x1F210, "squared_cjk_unified_ideograph_b"),
    (0x1F211, "squared_cjk_unified_ideograph_b"),
    (0x1F212, "squared_cjk_unified_ideograph_cc"),
    (0x1F213, "squared_katakana_de"),
    (0x1F214, "squared_cjk_unified_ideograph_e_c"),
    (0x1F215, "squared_cjk_unified_ideograph_a"),
    (0x1F216, "squared_cjk_unified_ideograph_e"),
    (0x1F217, "squared_cjk_unified_ideograph"),
    (0x1F218, "squared_cjk_unified_ideograph_ea"),
    (0x1F219, "squared_cjk_unified_ideograph"),
    (0x1F21A, "squared_cjk_unified_ideograph"),
    (0x1F21B, "squared_cjk_unified_ideograph"),
    (0x1F21C, "squared_cjk_unified_ideograph_d"),
    (0x1F21D, "squared_cjk_unified_ideograph_f_c"),
    (0x1F21E, "squared_cjk_unified_ideograph_d"),
    (0x1F21F, "squared_cjk_unified_ideograph_b"),
    (0x1F220, "squared_cjk_unified_ideograph_d"),
    (0x1F221, "squared_cjk_unified_ideograph_d"),
    (0x1F222, "squared_cjk_unified_ideograph_f"),
    (0x1F223, "squared_cjk_unified_ideograph_ca"),
    (0x1F224, "squared_cjk_unified_ideograph_f"),
    (0x1F225, "squared_cjk_unified_ideograph"),
    (0x1F226, "squared_cjk_unified_ideograph_f"),
    (0x1F227, "squared_cjk_unified_ideograph"),
    (0x1F228, "squared_cjk_unified_ideograph"),
    (0x1F229, "squared_cjk_unified_ideograph_e"),
    (0x1F22A, "squared_cjk_unified_ideograph_e"),
    (0x1F22B, "squared_cjk_unified_ideograph_a"),
    (0x1F22C, "squared_cjk_unified_ideograph_de"),
    (0x1F22D, "squared_cjk_unified_ideograph_e_d"),
    (0x1F22E, "squared_cjk_unified_ideograph_f"),
    (0x1F22F, "squared_cjk_unified_ideograph"),
    (0x1F230, "squared_cjk_unified_ideograph_d"),
    (0x1F231, "squared_cjk_unified_ideograph"),
    (0x1F232, "squared_cjk_unified_ideograph"),
    (0x1F233, "squared_cjk_unified_ideograph_a_a"),
    (0x1F234, "squared_cjk_unified_ideograph"),
    (0x1F235, "squared_cjk_unified_ideograph_e"),
    (0x1F236, "squared_cjk_unified_ideograph"),
    (0x1F237, "squared_cjk_unified_ideograph"),
    (0x1F238, "squared_cjk_unified_ideograph"),
    (0x1F239, "squared_cjk_unified_ideograph"),
    (0x1F23A, "squared_cjk_unified_ideograph_b"),
    (0x1F23B, "squared_cjk_unified_ideograph_d"),
    (0x1F240, "tortoise_shell_bracketed_cjk_unified_ideograph_c"),
    (0x1F241, "tortoise_shell_bracketed_cjk_unified_ideograph_e"),
    (0x1F242, "tortoise_shell_bracketed_cjk_unified_ideograph_e_c"),
    (0x1F243, "tortoise_shell_bracketed_cjk_unified_ideograph_b"),
    (0x1F244, "tortoise_shell_bracketed_cjk_unified_ideograph_b"),
    (0x1F245, "tortoise_shell_bracketed_cjk_unified_ideograph"),
    (0x1F246, "tortoise_shell_bracketed_cjk_unified_ideograph_d"),
    (0x1F247, "tortoise_shell_bracketed_cjk_unified_ideograph_dd"),
    (0x1F248, "tortoise_shell_bracketed_cjk_unified_ideograph"),
    (0x1F250, "circled_ideograph_advantage"),
    (0x1F251, "circled_ideograph_accept"),
    (0x1F260, "rounded_symbol_for_fu"),
    (0x1F261, "rounded_symbol_for_lu"),
    (0x1F262, "rounded_symbol_for_shou"),
    (0x1F263, "rounded_symbol_for_xi"),
    (0x1F264, "rounded_symbol_for_shuangxi"),
    (0x1F265, "rounded_symbol_for_cai"),
    (0x1F300, "cyclone"),
    (0x1F301, "foggy"),
    (0x1F302, "closed_umbrella"),
    (0x1F303, "night_with_stars"),
    (0x1F304, "sunrise_over_mountains"),
    (0x1F305, "sunrise"),
    (0x1F306, "cityscape_at_dusk"),
    (0x1F307, "sunset_over_buildings"),
    (0x1F308, "rainbow"),
    (0x1F309, "bridge_at_night"),
    (0x1F30A, "water_wave"),
    (0x1F30B, "volcano"),
    (0x1F30C, "milky_way"),
    (0x1F30D, "earth_globe_europe_africa"),
    (0x1F30E, "earth_globe_americas"),
    (0x1F30F, "earth_globe_asia_australia"),
    (0x1F310, "globe_with_meridians"),
    (0x1F311, "new_moon_symbol"),
    (0x1F312, "waxing_crescent_moon_symbol"),
    (0x1F313, "first_quarter_moon_symbol"),
    (0x1F314, "waxing_gibbous_moon_symbol"),
    (0x1F315, "full_moon_symbol"),
    (0x1F316, "waning_gibbous_moon_symbol"),
    (0x1F317, "last_quarter_moon_symbol"),
    (0x1F318, "waning_crescent_moon_symbol"),
    (0x1F319, "crescent_moon"),
    (0x1F31A, "new_moon_with_face"),
    (0x1F31B, "first_quarter_moon_with_face"),
    (0x1F31C, "last_quarter_moon_with_face"),
    (0x1F31D, "full_moon_with_face"),
    (0x1F31E, "sun_with_face"),
    (0x1F31F, "glowing_star"),
    (0x1F320, "shooting_star"),
    (0x1F321, "thermometer"),
    (0x1F322, "black_droplet"),
    (0x1F323, "white_sun"),
    (0x1F324, "white_sun_with_small_cloud"),
    (0x1F325, "white_sun_behind_cloud"),
    (0x1F326, "white_sun_behind_cloud_with_rain"),
    (0x1F327, "cloud_with_rain"),
    (0x1F328, "cloud_with_snow"),
    (0x1F329, "cloud_with_lightning"),
    (0x1F32A, "cloud_with_tornado"),
    (0x1F32B, "fog"),
    (0x1F32C, "wind_blowing_face"),
    (0x1F32D, "hot_dog"),
    (0x1F32E, "taco"),
    (0x1F32F, "burrito"),
    (0x1F330, "chestnut"),
    (0x1F331, "seedling"),
    (0x1F332, "evergreen_tree"),
    (0x1F333, "deciduous_tree"),
    (0x1F334, "palm_tree"),
    (0x1F335, "cactus"),
    (0x1F336, "hot_pepper"),
    (0x1F337, "tulip"),
    (0x1F338, "cherry_blossom"),
    (0x1F339, "rose"),
    (0x1F33A, "hibiscus"),
    (0x1F33B, "sunflower"),
    (0x1F33C, "blossom"),
    (0x1F33D, "ear_of_maize"),
    (0x1F33E, "ear_of_rice"),
    (0x1F33F, "herb"),
    (0x1F340, "four_leaf_clover"),
    (0x1F341, "maple_leaf"),
    (0x1F342, "fallen_leaf"),
    (0x1F343, "leaf_fluttering_in_wind"),
    (0x1F344, "mushroom"),
    (0x1F345, "tomato"),
    (0x1F346, "aubergine"),
    (0x1F347, "grapes"),
    (0x1F348, "melon"),
    (0x1F349, "watermelon"),
    (0x1F34A, "tangerine"),
    (0x1F34B, "lemon"),
    (0x1F34C, "banana"),
    (0x1F34D, "pineapple"),
    (0x1F34E, "red_apple"),
    (0x1F34F, "green_apple"),
    (0x1F350, "pear"),
    (0x1F351, "peach"),
    (0x1F352, "cherries"),
    (0x1F353, "strawberry"),
    (0x1F354, "hamburger"),
    (0x1F355, "slice_of_pizza"),
    (0x1F356, "meat_on_bone"),
    (0x1F357, "poultry_leg"),
    (0x1F358, "rice_cracker"),
    (0x1F359, "rice_ball"),
    (0x1F35A, "cooked_rice"),
    (0x1F35B, "curry_and_rice"),
    (0x1F35C, "steaming_bowl"),
    (0x1F35D, "spaghetti"),
    (0x1F35E, "bread"),
    (0x1F35F, "french_fries"),
    (0x1F360, "roasted_sweet_potato"),
    (0x1F361, "dango"),
    (0x1F362, "oden"),
    (0x1F363, "sushi"),
    (0x1F364, "fried_shrimp"),
    (0x1F365, "fish_cake_with_swirl_design"),
    (0x1F366, "soft_ice_cream"),
    (0x1F367, "shaved_ice"),
    (0x1F368, "ice_cream"),
    (0x1F369, "doughnut"),
    (0x1F36A, "cookie"),
    (0x1F36B, "chocolate_bar"),
    (0x1F36C, "candy"),
    (0x1F36D, "lollipop"),
    (0x1F36E, "custard"),
    (0x1F36F, "honey_pot"),
    (0x1F370, "shortcake"),
    (0x1F371, "bento_box"),
    (0x1F372, "pot_of_food"),
    (0x1F373, "cooking"),
    (0x1F374, "fork_and_knife"),
    (0x1F375, "teacup_without_handle"),
    (0x1F376, "sake_bottle_and_cup"),
    (0x1F377, "wine_glass"),
    (0x1F378, "cocktail_glass"),
    (0x1F379, "tropical_drink"),
    (0x1F37A, "beer_mug"),
    (0x1F37B, "clinking_beer_mugs"),
    (0x1F37C, "baby_bottle"),
    (0x1F37D, "fork_and_knife_with_plate"),
    (0x1F37E, "bottle_with_popping_cork"),
    (0x1F37F, "popcorn"),
    (0x1F380, "ribbon"),
    (0x1F381, "wrapped_present"),
    (0x1F382, "birthday_cake"),
    (0x1F383, "jack_o_lantern"),
    (0x1F384, "christmas_tree"),
    (0x1F385, "father_christmas"),
    (0x1F386, "fireworks"),
    (0x1F387, "firework_sparkler"),
    (0x1F388, "balloon"),
    (0x1F389, "party_popper"),
    (0x1F38A, "confetti_ball"),
    (0x1F38B, "tanabata_tree"),
    (0x1F38C, "crossed_flags"),
    (0x1F38D, "pine_decoration"),
    (0x1F38E, "japanese_dolls"),
    (0x1F38F, "carp_streamer"),
    (0x1F390, "wind_chime"),
    (0x1F391, "moon_viewing_ceremony"),
    (0x1F392, "school_satchel"),
    (0x1F393, "graduation_cap"),
    (0x1F394, "heart_with_tip_on_the_left"),
    (0x1F395, "bouquet_of_flowers"),
    (0x1F396, "military_medal"),
    (0x1F397, "reminder_ribbon"),
    (0x1F398, "musical_keyboard_with_jacks"),
    (0x1F399, "studio_microphone"),
    (0x1F39A, "level_slider"),
    (0x1F39B, "control_knobs"),
    (0x1F39C, "beamed_ascending_musical_notes"),
    (0x1F39D, "beamed_descending_musical_notes"),
    (0x1F39E, "film_frames"),
    (0x1F39F, "admission_tickets"),
    (0x1F3A0, "carousel_horse"),
    (0x1F3A1, "ferris_wheel"),
    (0x1F3A2, "roller_coaster"),
    (0x1F3A3, "fishing_pole_and_fish"),
    (0x1F3A4, "microphone"),
    (0x1F3A5, "movie_camera"),
    (0x1F3A6, "cinema"),
    (0x1F3A7, "headphone"),
    (0x1F3A8, "artist_palette"),
    (0x1F3A9, "top_hat"),
    (0x1F3AA, "circus_tent"),
    (0x1F3AB, "ticket"),
    (0x1F3AC, "clapper_board"),
    (0x1F3AD, "performing_arts"),
    (0x1F3AE, "video_game"),
    (0x1F3AF, "direct_hit"),
    (0x1F3B0, "slot_machine"),
    (0x1F3B1, "billiards"),
    (0x1F3B2, "game_die"),
    (0x1F3B3, "bowling"),
    (0x1F3B4, "flower_playing_cards"),
    (0x1F3B5, "musical_note"),
    (0x1F3B6, "multiple_musical_notes"),
    (0x1F3B7, "saxophone"),
    (0x1F3B8, "guitar"),
    (0x1F3B9, "musical_keyboard"),
    (0x1F3BA, "trumpet"),
    (0x1F3BB, "violin"),
    (0x1F3BC, "musical_score"),
    (0x1F3BD, "running_shirt_with_sash"),
    (0x1F3BE, "tennis_racquet_and_ball"),
    (0x1F3BF, "ski_and_ski_boot"),
    (0x1F3C0, "basketball_and_hoop"),
    (0x1F3C1, "chequered_flag"),
    (0x1F3C2, "snowboarder"),
    (0x1F3C3, "runner"),
    (0x1F3C4, "surfer"),
    (0x1F3C5, "sports_medal"),
    (0x1F3C6, "trophy"),
    (0x1F3C7, "horse_racing"),
    (0x1F3C8, "american_football"),
    (0x1F3C9, "rugby_football"),
    (0x1F3CA, "swimmer"),
    (0x1F3CB, "weight_lifter"),
    (0x1F3CC, "golfer"),
    (0x1F3CD, "racing_motorcycle"),
    (0x1F3CE, "racing_car"),
    (0x1F3CF, "cricket_bat_and_ball"),
    (0x1F3D0, "volleyball"),
    (0x1F3D1, "field_hockey_stick_and_ball"),
    (0x1F3D2, "ice_hockey_stick_and_puck"),
    (0x1F3D3, "table_tennis_paddle_and_ball"),
    (0x1F3D4, "snow_capped_mountain"),
    (0x1F3D5, "camping"),
    (0x1F3D6, "beach_with_umbrella"),
    (0x1F3D7, "building_construction"),
    (0x1F3D8, "house_buildings"),
    (0x1F3D9, "cityscape"),
    (0x1F3DA, "derelict_house_building"),
    (0x1F3DB, "classical_building"),
    (0x1F3DC, "desert"),
    (0x1F3DD, "desert_island"),
    (0x1F3DE, "national_park"),
    (0x1F3DF, "stadium"),
    (0x1F3E0, "house_building"),
    (0x1F3E1, "house_with_garden"),
    (0x1F3E2, "office_building"),
    (0x1F3E3, "japanese_post_office"),
    (0x1F3E4, "european_post_office"),
    (0x1F3E5, "hospital"),
    (0x1F3E6, "bank"),
    (0x1F3E7, "automated_teller_machine"),
    (0x1F3E8, "hotel"),
    (0x1F3E9, "love_hotel"),
    (0x1F3EA, "convenience_store"),
    (0x1F3EB, "school"),
    (0x1F3EC, "department_store"),
    (0x1F3ED, "factory"),
    (0x1F3EE, "izakaya_lantern"),
    (0x1F3EF, "japanese_castle"),
    (0x1F3F0, "european_castle"),
    (0x1F3F1, "white_pennant"),
    (0x1F3F2, "black_pennant"),
    (0x1F3F3, "waving_white_flag"),
    (0x1F3F4, "waving_black_flag"),
    (0x1F3F5, "rosette"),
    (0x1F3F6, "black_rosette"),
    (0x1F3F7, "label"),
    (0x1F3F8, "badminton_racquet_and_shuttlecock"),
    (0x1F3F9, "bow_and_arrow"),
    (0x1F3FA, "amphora"),
    (0x1F3FB, "emoji_modifier_fitzpatrick_type"),
    (0x1F3FC, "emoji_modifier_fitzpatrick_type"),
    (0x1F3FD, "emoji_modifier_fitzpatrick_type"),
    (0x1F3FE, "emoji_modifier_fitzpatrick_type"),
    (0x1F3FF, "emoji_modifier_fitzpatrick_type"),
    (0x1F400, "rat"),
    (0x1F401, "mouse"),
    (0x1F402, "ox"),
    (0x1F403, "water_buffalo"),
    (0x1F404, "cow"),
    (0x1F405, "tiger"),
    (0x1F406, "leopard"),
    (0x1F407, "rabbit"),
    (0x1F408, "cat"),
    (0x1F409, "dragon"),
    (0x1F40A, "crocodile"),
    (0x1F40B, "whale"),
    (0x1F40C, "snail"),
    (0x1F40D, "snake"),
    (0x1F40E, "horse"),
    (0x1F40F, "ram"),
    (0x1F410, "goat"),
    (0x1F411, "sheep"),
    (0x1F412, "monkey"),
    (0x1F413, "rooster"),
    (0x1F414, "chicken"),
    (0x1F415, "dog"),
    (0x1F416, "pig"),
    (0x1F417, "boar"),
    (0x1F418, "elephant"),
    (0x1F419, "octopus"),
    (0x1F41A, "spiral_shell"),
    (0x1F41B, "bug"),
    (0x1F41C, "ant"),
    (0x1F41D, "honeybee"),
    (0x1F41E, "lady_beetle"),
    (0x1F41F, "fish"),
    (0x1F420, "tropical_fish"),
    (0x1F421, "blowfish"),
    (0x1F422, "turtle"),
    (0x1F423, "hatching_chick"),
    (0x1F424, "baby_chick"),
    (0x1F425, "front_facing_baby_chick"),
    (0x1F426, "bird"),
    (0x1F427, "penguin"),
    (0x1F428, "koala"),
    (0x1F429, "poodle"),
    (0x1F42A, "dromedary_camel"),
    (0x1F42B, "bactrian_camel"),
    (0x1F42C, "dolphin"),
    (0x1F42D, "mouse_face"),
    (0x1F42E, "cow_face"),
    (0x1F42F, "tiger_face"),
    (0x1F430, "rabbit_face"),
    (0x1F431, "cat_face"),
    (0x1F432, "dragon_face"),
    (0x1F433, "spouting_whale"),
    (0x1F434, "horse_face"),
    (0x1F435, "monkey_face"),
    (0x1F436, "dog_face"),
    (0x1F437, "pig_face"),
    (0x1F438, "frog_face"),
    (0x1F439, "hamster_face"),
    (0x1F43A, "wolf_face"),
    (0x1F43B, "bear_face"),
    (0x1F43C, "panda_face"),
    (0x1F43D, "pig_nose"),
    (0x1F43E, "paw_prints"),
    (0x1F43F, "chipmunk"),
    (0x1F440, "eyes"),
    (0x1F441, "eye"),
    (0x1F442, "ear"),
    (0x1F443, "nose"),
    (0x1F444, "mouth"),
    (0x1F445, "tongue"),
    (0x1F446, "white_up_pointing_backhand_index"),
    (0x1F447, "white_down_pointing_backhand_index"),
    (0x1F448, "white_left_pointing_backhand_index"),
    (0x1F449, "white_right_pointing_backhand_index"),
    (0x1F44A, "fisted_hand_sign"),
    (0x1F44B, "waving_hand_sign"),
    (0x1F44C, "ok_hand_sign"),
    (0x1F44D, "thumbs_up_sign"),
    (0x1F44E, "thumbs_down_sign"),
    (0x1F44F, "clapping_hands_sign"),
    (0x1F450, "open_hands_sign"),
    (0x1F451, "crown"),
    (0x1F452, "womans_hat"),
    (0x1F453, "eyeglasses"),
    (0x1F454, "necktie"),
    (0x1F455, "t_shirt"),
    (0x1F456, "jeans"),
    (0x1F457, "dress"),
    (0x1F458, "kimono"),
    (0x1F459, "bikini"),
    (0x1F45A, "womans_clothes"),
    (0x1F45B, "purse"),
    (0x1F45C, "handbag"),
    (0x1F45D, "pouch"),
    (0x1F45E, "mans_shoe"),
    (0x1F45F, "athletic_shoe"),
    (0x1F460, "high_heeled_shoe"),
    (0x1F461, "womans_sandal"),
    (0x1F462, "womans_boots"),
    (0x1F463, "footprints"),
    (0x1F464, "bust_in_silhouette"),
    (0x1F465, "busts_in_silhouette"),
    (0x1F466, "boy"),
    (0x1F467, "girl"),
    (0x1F468, "man"),
    (0x1F469, "woman"),
    (0x1F46A, "family"),
    (0x1F46B, "man_and_woman_holding_hands"),
    (0x1F46C, "two_men_holding_hands"),
    (0x1F46D, "two_women_holding_hands"),
    (0x1F46E, "police_officer"),
    (0x1F46F, "woman_with_bunny_ears"),
    (0x1F470, "bride_with_veil"),
    (0x1F471, "person_with_blond_hair"),
    (0x1F472, "man_with_gua_pi_mao"),
    (0x1F473, "man_with_turban"),
    (0x1F474, "older_man"),
    (0x1F475, "older_woman"),
    (0x1F476, "baby"),
    (0x1F477, "construction_worker"),
    (0x1F478, "princess"),
    (0x1F479, "japanese_ogre"),
    (0x1F47A, "japanese_goblin"),
    (0x1F47B, "ghost"),
    (0x1F47C, "baby_angel"),
    (0x1F47D, "extraterrestrial_alien"),
    (0x1F47E, "alien_monster"),
    (0x1F47F, "imp"),
    (0x1F480, "skull"),
    (0x1F481, "information_desk_person"),
    (0x1F482, "guardsman"),
    (0x1F483, "dancer"),
    (0x1F484, "lipstick"),
    (0x1F485, "nail_polish"),
    (0x1F486, "face_massage"),
    (0x1F487, "haircut"),
    (0x1F488, "barber_pole"),
    (0x1F489, "syringe"),
    (0x1F48A, "pill"),
    (0x1F48B, "kiss_mark"),
    (0x1F48C, "love_letter"),
    (0x1F48D, "ring"),
    (0x1F48E, "gem_stone"),
    (0x1F48F, "kiss"),
    (0x1F490, "bouquet"),
    (0x1F491, "couple_with_heart"),
    (0x1F492, "wedding"),
    (0x1F493, "beating_heart"),
    (0x1F494, "broken_heart"),
    (0x1F495, "two_hearts"),
    (0x1F496, "sparkling_heart"),
    (0x1F497, "growing_heart"),
    (0x1F498, "heart_with_arrow"),
    (0x1F499, "blue_heart"),
    (0x1F49A, "green_heart"),
    (0x1F49B, "yellow_heart"),
    (0x1F49C, "purple_heart"),
    (0x1F49D, "heart_with_ribbon"),
    (0x1F49E, "revolving_hearts"),
    (0x1F49F, "heart_decoration"),
    (0x1F4A0, "diamond_shape_with_a_dot_inside"),
    (0x1F4A1, "electric_light_bulb"),
    (0x1F4A2, "anger_symbol"),
    (0x1F4A3, "bomb"),
    (0x1F4A4, "sleeping_symbol"),
    (0x1F4A5, "collision_symbol"),
    (0x1F4A6, "splashing_sweat_symbol"),
    (0x1F4A7, "droplet"),
    (0x1F4A8, "dash_symbol"),
    (0x1F4A9, "pile_of_poo"),
    (0x1F4AA, "flexed_biceps"),
    (0x1F4AB, "dizzy_symbol"),
    (0x1F4AC, "speech_balloon"),
    (0x1F4AD, "thought_balloon"),
    (0x1F4AE, "white_flower"),
    (0x1F4AF, "hundred_points_symbol"),
    (0x1F4B0, "money_bag"),
    (0x1F4B1, "currency_exchange"),
    (0x1F4B2, "heavy_dollar_sign"),
    (0x1F4B3, "credit_card"),
    (0x1F4B4, "banknote_with_yen_sign"),
    (0x1F4B5, "banknote_with_dollar_sign"),
    (0x1F4B6, "banknote_with_euro_sign"),
    (0x1F4B7, "banknote_with_pound_sign"),
    (0x1F4B8, "money_with_wings"),
    (0x1F4B9, "chart_with_upwards_trend_and_yen_sign"),
    (0x1F4BA, "seat"),
    (0x1F4BB, "personal_computer"),
    (0x1F4BC, "briefcase"),
    (0x1F4BD, "minidisc"),
    (0x1F4BE, "floppy_disk"),
    (0x1F4BF, "optical_disc"),
    (0x1F4C0, "dvd"),
    (0x1F4C1, "file_folder"),
    (0x1F4C2, "open_file_folder"),
    (0x1F4C3, "page_with_curl"),
    (0x1F4C4, "page_facing_up"),
    (0x1F4C5, "calendar"),
    (0x1F4C6, "tear_off_calendar"),
    (0x1F4C7, "card_index"),
    (0x1F4C8, "chart_with_upwards_trend"),
    (0x1F4C9, "chart_with_downwards_trend"),
    (0x1F4CA, "bar_chart"),
    (0x1F4CB, "clipboard"),
    (0x1F4CC, "pushpin"),
    (0x1F4CD, "round_pushpin"),
    (0x1F4CE, "paperclip"),
    (0x1F4CF, "straight_ruler"),
    (0x1F4D0, "triangular_ruler"),
    (0x1F4D1, "bookmark_tabs"),
    (0x1F4D2, "ledger"),
    (0x1F4D3, "notebook"),
    (0x1F4D4, "notebook_with_decorative_cover"),
    (0x1F4D5, "closed_book"),
    (0x1F4D6, "open_book"),
    (0x1F4D7, "green_book"),
    (0x1F4D8, "blue_book"),
    (0x1F4D9, "orange_book"),
    (0x1F4DA, "books"),
    (0x1F4DB, "name_badge"),
    (0x1F4DC, "scroll"),
    (0x1F4DD, "memo"),
    (0x1F4DE, "telephone_receiver"),
    (0x1F4DF, "pager"),
    (0x1F4E0, "fax_machine"),
    (0x1F4E1, "satellite_antenna"),
    (0x1F4E2, "public_address_loudspeaker"),
    (0x1F4E3, "cheering_megaphone"),
    (0x1F4E4, "outbox_tray"),
    (0x1F4E5, "inbox_tray"),
    (0x1F4E6, "package"),
    (0x1F4E7, "e_mail_symbol"),
    (0x1F4E8, "incoming_envelope"),
    (0x1F4E9, "envelope_with_downwards_arrow_above"),
    (0x1F4EA, "closed_mailbox_with_lowered_flag"),
    (0x1F4EB, "closed_mailbox_with_raised_flag"),
    (0x1F4EC, "open_mailbox_with_raised_flag"),
    (0x1F4ED, "open_mailbox_with_lowered_flag"),
    (0x1F4EE, "postbox"),
    (0x1F4EF, "postal_horn"),
    (0x1F4F0, "newspaper"),
    (0x1F4F1, "mobile_phone"),
    (0x1F4F2, "mobile_phone_with_rightwards_arrow_at_left"),
    (0x1F4F3, "vibration_mode"),
    (0x1F4F4, "mobile_phone_off"),
    (0x1F4F5, "no_mobile_phones"),
    (0x1F4F6, "antenna_with_bars"),
    (0x1F4F7, "camera"),
    (0x1F4F8, "camera_with_flash"),
    (0x1F4F9, "video_camera"),
    (0x1F4FA, "television"),
    (0x1F4FB, "radio"),
    (0x1F4FC, "videocassette"),
    (0x1F4FD, "film_projector"),
    (0x1F4FE, "portable_stereo"),
    (0x1F4FF, "prayer_beads"),
    (0x1F500, "twisted_rightwards_arrows"),
    (0x1F501, "clockwise_rightwards_and_leftwards_open_circle_arrows"),
    (0x1F502, "clockwise_rightwards_and_leftwards_open_circle_arrows_with_circled_one_overlay"),
    (0x1F503, "clockwise_downwards_and_upwards_open_circle_arrows"),
    (0x1F504, "anticlockwise_downwards_and_upwards_open_circle_arrows"),
    (0x1F505, "low_brightness_symbol"),
    (0x1F506, "high_brightness_symbol"),
    (0x1F507, "speaker_with_cancellation_stroke"),
    (0x1F508, "speaker"),
    (0x1F509, "speaker_with_one_sound_wave"),
    (0x1F50A, "speaker_with_three_sound_waves"),
    (0x1F50B, "battery"),
    (0x1F50C, "electric_plug"),
    (0x1F50D, "left_pointing_magnifying_glass"),
    (0x1F50E, "right_pointing_magnifying_glass"),
    (0x1F50F, "lock_with_ink_pen"),
    (0x1F510, "closed_lock_with_key"),
    (0x1F511, "key"),
    (0x1F512, "lock"),
    (0x1F513, "open_lock"),
    (0x1F514, "bell"),
    (0x1F515, "bell_with_cancellation_stroke"),
    (0x1F516, "bookmark"),
    (0x1F517, "link_symbol"),
    (0x1F518, "radio_button"),
    (0x1F519, "back_with_leftwards_arrow_above"),
    (0x1F51A, "end_with_leftwards_arrow_above"),
    (0x1F51B, "on_with_exclamation_mark_with_left_right_arrow_above"),
    (0x1F51C, "soon_with_rightwards_arrow_above"),
    (0x1F51D, "top_with_upwards_arrow_above"),
    (0x1F51E, "no_one_under_eighteen_symbol"),
    (0x1F51F, "keycap_ten"),
    (0x1F520, "input_symbol_for_latin_capital_letters"),
    (0x1F521, "input_symbol_for_latin_small_letters"),
    (0x1F522, "input_symbol_for_numbers"),
    (0x1F523, "input_symbol_for_symbols"),
    (0x1F524, "input_symbol_for_latin_letters"),
    (0x1F525, "fire"),
    (0x1F526, "electric_torch"),
    (0x1F527, "wrench"),
    (0x1F528, "hammer"),
    (0x1F529, "nut_and_bolt"),
    (0x1F52A, "hocho"),
    (0x1F52B, "pistol"),
    (0x1F52C, "microscope"),
    (0x1F52D, "telescope"),
    (0x1F52E, "crystal_ball"),
    (0x1F52F, "six_pointed_star_with_middle_dot"),
    (0x1F530, "japanese_symbol_for_beginner"),
    (0x1F531, "trident_emblem"),
    (0x1F532, "black_square_button"),
    (0x1F533, "white_square_button"),
    (0x1F534, "large_red_circle"),
    (0x1F535, "large_blue_circle"),
    (0x1F536, "large_orange_diamond"),
    (0x1F537, "large_blue_diamond"),
    (0x1F538, "small_orange_diamond"),
    (0x1F539, "small_blue_diamond"),
    (0x1F53A, "up_pointing_red_triangle"),
    (0x1F53B, "down_pointing_red_triangle"),
    (0x1F53C, "up_pointing_small_red_triangle"),
    (0x1F53D, "down_pointing_small_red_triangle"),
    (0x1F53E, "lower_right_shadowed_white_circle"),
    (0x1F53F, "upper_right_shadowed_white_circle"),
    (0x1F540, "circled_cross_pommee"),
    (0x1F541, "cross_pommee_with_half_circle_below"),
    (0x1F542, "cross_pommee"),
    (0x1F543, "notched_left_semicircle_with_three_dots"),
    (0x1F544, "notched_right_semicircle_with_three_dots"),
    (0x1F545, "symbol_for_marks_chapter"),
    (0x1F546, "white_latin_cross"),
    (0x1F547, "heavy_latin_cross"),
    (0x1F548, "celtic_cross"),
    (0x1F549, "om_symbol"),
    (0x1F54A, "dove_of_peace"),
    (0x1F54B, "kaaba"),
    (0x1F54C, "mosque"),
    (0x1F54D, "synagogue"),
    (0x1F54E, "menorah_with_nine_branches"),
    (0x1F54F, "bowl_of_hygieia"),
    (0x1F550, "clock_face_one_oclock"),
    (0x1F551, "clock_face_two_oclock"),
    (0x1F552, "clock_face_three_oclock"),
    (0x1F553, "clock_face_four_oclock"),
    (0x1F554, "clock_face_five_oclock"),
    (0x1F555, "clock_face_six_oclock"),
    (0x1F556, "clock_face_seven_oclock"),
    (0x1F557, "clock_face_eight_oclock"),
    (0x1F558, "clock_face_nine_oclock"),
    (0x1F559, "clock_face_ten_oclock"),
    (0x1F55A, "clock_face_eleven_oclock"),
    (0x1F55B, "clock_face_twelve_oclock"),
    (0x1F55C, "clock_face_one_thirty"),
    (0x1F55D, "clock_face_two_thirty"),
    (0x1F55E, "clock_face_three_thirty"),
    (0x1F55F, "clock_face_four_thirty"),
    (0x1F560, "clock_face_five_thirty"),
    (0x1F561, "clock_face_six_thirty"),
    (0x1F562, "clock_face_seven_thirty"),
    (0x1F563, "clock_face_eight_thirty"),
    (0x1F564, "clock_face_nine_thirty"),
    (0x1F565, "clock_face_ten_thirty"),
    (0x1F566, "clock_face_eleven_thirty"),
    (0x1F567, "clock_face_twelve_thirty"),
    (0x1F568, "right_speaker"),
    (0x1F569, "right_speaker_with_one_sound_wave"),
    (0x1F56A, "right_speaker_with_three_sound_waves"),
    (0x1F56B, "bullhorn"),
    (0x1F56C, "bullhorn_with_sound_waves"),
    (0x1F56D, "ringing_bell"),
    (0x1F56E, "book"),
    (0x1F56F, "candle"),
    (0x1F570, "mantelpiece_clock"),
    (0x1F571, "black_skull_and_crossbones"),
    (0x1F572, "no_piracy"),
    (0x1F573, "hole"),
    (0x1F574, "man_in_business_suit_levitating"),
    (0x1F575, "sleuth_or_spy"),
    (0x1F576, "dark_sunglasses"),
    (0x1F577, "spider"),
    (0x1F578, "spider_web"),
    (0x1F579, "joystick"),
    (0x1F57A, "man_dancing"),
    (0x1F57B, "left_hand_telephone_receiver"),
    (0x1F57C, "telephone_receiver_with_page"),
    (0x1F57D, "right_hand_telephone_receiver"),
    (0x1F57E, "white_touchtone_telephone"),
    (0x1F57F, "black_touchtone_telephone"),
    (0x1F580, "telephone_on_top_of_modem"),
    (0x1F581, "clamshell_mobile_phone"),
    (0x1F582, "back_of_envelope"),
    (0x1F583, "stamped_envelope"),
    (0x1F584, "envelope_with_lightning"),
    (0x1F585, "flying_envelope"),
    (0x1F586, "pen_over_stamped_envelope"),
    (0x1F587, "linked_paperclips"),
    (0x1F588, "black_pushpin"),
    (0x1F589, "lower_left_pencil"),
    (0x1F58A, "lower_left_ballpoint_pen"),
    (0x1F58B, "lower_left_fountain_pen"),
    (0x1F58C, "lower_left_paintbrush"),
    (0x1F58D, "lower_left_crayon"),
    (0x1F58E, "left_writing_hand"),
    (0x1F58F, "turned_ok_hand_sign"),
    (0x1F590, "raised_hand_with_fingers_splayed"),
    (0x1F591, "reversed_raised_hand_with_fingers_splayed"),
    (0x1F592, "reversed_thumbs_up_sign"),
    (0x1F593, "reversed_thumbs_down_sign"),
    (0x1F594, "reversed_victory_hand"),
    (0x1F595, "reversed_hand_with_middle_finger_extended"),
    (0x1F596, "raised_hand_with_part_between_middle_and_ring_fingers"),
    (0x1F597, "white_down_pointing_left_hand_index"),
    (0x1F598, "sideways_white_left_pointing_index"),
    (0x1F599, "sideways_white_right_pointing_index"),
    (0x1F59A, "sideways_black_left_pointing_index"),
    (0x1F59B, "sideways_black_right_pointing_index"),
    (0x1F59C, "black_left_pointing_backhand_index"),
    (0x1F59D, "black_right_pointing_backhand_index"),
    (0x1F59E, "sideways_white_up_pointing_index"),
    (0x1F59F, "sideways_white_down_pointing_index"),
    (0x1F5A0, "sideways_black_up_pointing_index"),
    (0x1F5A1, "sideways_black_down_pointing_index"),
    (0x1F5A2, "black_up_pointing_backhand_index"),
    (0x1F5A3, "black_down_pointing_backhand_index"),
    (0x1F5A4, "black_heart"),
    (0x1F5A5, "desktop_computer"),
    (0x1F5A6, "keyboard_and_mouse"),
    (0x1F5A7, "three_networked_computers"),
    (0x1F5A8, "printer"),
    (0x1F5A9, "pocket_calculator"),
    (0x1F5AA, "black_hard_shell_floppy_disk"),
    (0x1F5AB, "white_hard_shell_floppy_disk"),
    (0x1F5AC, "soft_shell_floppy_disk"),
    (0x1F5AD, "tape_cartridge"),
    (0x1F5AE, "wired_keyboard"),
    (0x1F5AF, "one_button_mouse"),
    (0x1F5B0, "two_button_mouse"),
    (0x1F5B1, "three_button_mouse"),
    (0x1F5B2, "trackball"),
    (0x1F5B3, "old_personal_computer"),
    (0x1F5B4, "hard_disk"),
    (0x1F5B5, "screen"),
    (0x1F5B6, "printer_icon"),
    (0x1F5B7, "fax_icon"),
    (0x1F5B8, "optical_disc_icon"),
    (0x1F5B9, "document_with_text"),
    (0x1F5BA, "document_with_text_and_picture"),
    (0x1F5BB, "document_with_picture"),
    (0x1F5BC, "frame_with_picture"),
    (0x1F5BD, "frame_with_tiles"),
    (0x1F5BE, "frame_with_an_x"),
    (0x1F5BF, "black_folder"),
    (0x1F5C0, "folder"),
    (0x1F5C1, "open_folder"),
    (0x1F5C2, "card_index_dividers"),
    (0x1F5C3, "card_file_box"),
    (0x1F5C4, "file_cabinet"),
    (0x1F5C5, "empty_note"),
    (0x1F5C6, "empty_note_page"),
    (0x1F5C7, "empty_note_pad"),
    (0x1F5C8, "note"),
    (0x1F5C9, "note_page"),
    (0x1F5CA, "note_pad"),
    (0x1F5CB, "empty_document"),
    (0x1F5CC, "empty_page"),
    (0x1F5CD, "empty_pages"),
    (0x1F5CE, "document"),
    (0x1F5CF, "page"),
    (0x1F5D0, "pages"),
    (0x1F5D1, "wastebasket"),
    (0x1F5D2, "spiral_note_pad"),
    (0x1F5D3, "spiral_calendar_pad"),
    (0x1F5D4, "desktop_window"),
    (0x1F5D5, "minimize"),
    (0x1F5D6, "maximize"),
    (0x1F5D7, "overlap"),
    (0x1F5D8, "clockwise_right_and_left_semicircle_arrows"),
    (0x1F5D9, "cancellation_x"),
    (0x1F5DA, "increase_font_size_symbol"),
    (0x1F5DB, "decrease_font_size_symbol"),
    (0x1F5DC, "compression"),
    (0x1F5DD, "old_key"),
    (0x1F5DE, "rolled_up_newspaper"),
    (0x1F5DF, "page_with_circled_text"),
    (0x1F5E0, "stock_chart"),
    (0x1F5E1, "dagger_knife"),
    (0x1F5E2, "lips"),
    (0x1F5E3, "speaking_head_in_silhouette"),
    (0x1F5E4, "three_rays_above"),
    (0x1F5E5, "three_rays_below"),
    (0x1F5E6, "three_rays_left"),
    (0x1F5E7, "three_rays_right"),
    (0x1F5E8, "left_speech_bubble"),
    (0x1F5E9, "right_speech_bubble"),
    (0x1F5EA, "two_speech_bubbles"),
    (0x1F5EB, "three_speech_bubbles"),
    (0x1F5EC, "left_thought_bubble"),
    (0x1F5ED, "right_thought_bubble"),
    (0x1F5EE, "left_anger_bubble"),
    (0x1F5EF, "right_anger_bubble"),
    (0x1F5F0, "mood_bubble"),
    (0x1F5F1, "lightning_mood_bubble"),
    (0x1F5F2, "lightning_mood"),
    (0x1F5F3, "ballot_box_with_ballot"),
    (0x1F5F4, "ballot_script_x"),
    (0x1F5F5, "ballot_box_with_script_x"),
    (0x1F5F6, "ballot_bold_script_x"),
    (0x1F5F7, "ballot_box_with_bold_script_x"),
    (0x1F5F8, "light_check_mark"),
    (0x1F5F9, "ballot_box_with_bold_check"),
    (0x1F5FA, "world_map"),
    (0x1F5FB, "mount_fuji"),
    (0x1F5FC, "tokyo_tower"),
    (0x1F5FD, "statue_of_liberty"),
    (0x1F5FE, "silhouette_of_japan"),
    (0x1F5FF, "moyai"),
    (0x1F600, "grinning_face"),
    (0x1F601, "grinning_face_with_smiling_eyes"),
    (0x1F602, "face_with_tears_of_joy"),
    (0x1F603, "smiling_face_with_open_mouth"),
    (0x1F604, "smiling_face_with_open_mouth_and_smiling_eyes"),
    (0x1F605, "smiling_face_with_open_mouth_and_cold_sweat"),
    (0x1F606, "smiling_face_with_open_mouth_and_tightly_closed_eyes"),
    (0x1F607, "smiling_face_with_halo"),
    (0x1F608, "smiling_face_with_horns"),
    (0x1F609, "winking_face"),
    (0x1F60A, "smiling_face_with_smiling_eyes"),
    (0x1F60B, "face_savouring_delicious_food"),
    (0x1F60C, "relieved_face"),
    (0x1F60D, "smiling_face_with_heart_shaped_eyes"),
    (0x1F60E, "smiling_face_with_sunglasses"),
    (0x1F60F, "smirking_face"),
    (0x1F610, "neutral_face"),
    (0x1F611, "expressionless_face"),
    (0x1F612, "unamused_face"),
    (0x1F613, "face_with_cold_sweat"),
    (0x1F614, "pensive_face"),
    (0x1F615, "confused_face"),
    (0x1F616, "confounded_face"),
    (0x1F617, "kissing_face"),
    (0x1F618, "face_throwing_a_kiss"),
    (0x1F619, "kissing_face_with_smiling_eyes"),
    (0x1F61A, "kissing_face_with_closed_eyes"),
    (0x1F61B, "face_with_stuck_out_tongue"),
    (0x1F61C, "face_with_stuck_out_tongue_and_winking_eye"),
    (0x1F61D, "face_with_stuck_out_tongue_and_tightly_closed_eyes"),
    (0x1F61E, "disappointed_face"),
    (0x1F61F, "worried_face"),
    (0x1F620, "angry_face"),
    (0x1F621, "pouting_face"),
    (0x1F622, "crying_face"),
    (0x1F623, "persevering_face"),
    (0x1F624, "face_with_look_of_triumph"),
    (0x1F625, "disappointed_but_relieved_face"),
    (0x1F626, "frowning_face_with_open_mouth"),
    (0x1F627, "anguished_face"),
    (0x1F628, "fearful_face"),
    (0x1F629, "weary_face"),
    (0x1F62A, "sleepy_face"),
    (0x1F62B, "tired_face"),
    (0x1F62C, "grimacing_face"),
    (0x1F62D, "loudly_crying_face"),
    (0x1F62E, "face_with_open_mouth"),
    (0x1F62F, "hushed_face"),
    (0x1F630, "face_with_open_mouth_and_cold_sweat"),
    (0x1F631, "face_screaming_in_fear"),
    (0x1F632, "astonished_face"),
    (0x1F633, "flushed_face"),
    (0x1F634, "sleeping_face"),
    (0x1F635, "dizzy_face"),
    (0x1F636, "face_without_mouth"),
    (0x1F637, "face_with_medical_mask"),
    (0x1F638, "grinning_cat_face_with_smiling_eyes"),
    (0x1F639, "cat_face_with_tears_of_joy"),
    (0x1F63A, "smiling_cat_face_with_open_mouth"),
    (0x1F63B, "smiling_cat_face_with_heart_shaped_eyes"),
    (0x1F63C, "cat_face_with_wry_smile"),
    (0x1F63D, "kissing_cat_face_with_closed_eyes"),
    (0x1F63E, "pouting_cat_face"),
    (0x1F63F, "crying_cat_face"),
    (0x1F640, "weary_cat_face"),
    (0x1F641, "slightly_frowning_face"),
    (0x1F642, "slightly_smiling_face"),
    (0x1F643, "upside_down_face"),
    (0x1F644, "face_with_rolling_eyes"),
    (0x1F645, "face_with_no_good_gesture"),
    (0x1F646, "face_with_ok_gesture"),
    (0x1F647, "person_bowing_deeply"),
    (0x1F648, "see_no_evil_monkey"),
    (0x1F649, "hear_no_evil_monkey"),
    (0x1F64A, "speak_no_evil_monkey"),
    (0x1F64B, "happy_person_raising_one_hand"),
    (0x1F64C, "person_raising_both_hands_in_celebration"),
    (0x1F64D, "person_frowning"),
    (0x1F64E, "person_with_pouting_face"),
    (0x1F64F, "person_with_folded_hands"),
    (0x1F680, "rocket"),
    (0x1F681, "helicopter"),
    (0x1F682, "steam_locomotive"),
    (0x1F683, "railway_car"),
    (0x1F684, "high_speed_train"),
    (0x1F685, "high_speed_train_with_bullet_nose"),
    (0x1F686, "train"),
    (0x1F687, "metro"),
    (0x1F688, "light_rail"),
    (0x1F689, "station"),
    (0x1F68A, "tram"),
    (0x1F68B, "tram_car"),
    (0x1F68C, "bus"),
    (0x1F68D, "oncoming_bus"),
    (0x1F68E, "trolleybus"),
    (0x1F68F, "bus_stop"),
    (0x1F690, "minibus"),
    (0x1F691, "ambulance"),
    (0x1F692, "fire_engine"),
    (0x1F693, "police_car"),
    (0x1F694, "oncoming_police_car"),
    (0x1F695, "taxi"),
    (0x1F696, "oncoming_taxi"),
    (0x1F697, "automobile"),
    (0x1F698, "oncoming_automobile"),
    (0x1F699, "recreational_vehicle"),
    (0x1F69A, "delivery_truck"),
    (0x1F69B, "articulated_lorry"),
    (0x1F69C, "tractor"),
    (0x1F69D, "monorail"),
    (0x1F69E, "mountain_railway"),
    (0x1F69F, "suspension_railway"),
    (0x1F6A0, "mountain_cableway"),
    (0x1F6A1, "aerial_tramway"),
    (0x1F6A2, "ship"),
    (0x1F6A3, "rowboat"),
    (0x1F6A4, "speedboat"),
    (0x1F6A5, "horizontal_traffic_light"),
    (0x1F6A6, "vertical_traffic_light"),
    (0x1F6A7, "construction_sign"),
    (0x1F6A8, "police_cars_revolving_light"),
    (0x1F6A9, "triangular_flag_on_post"),
    (0x1F6AA, "door"),
    (0x1F6AB, "no_entry_sign"),
    (0x1F6AC, "smoking_symbol"),
    (0x1F6AD, "no_smoking_symbol"),
    (0x1F6AE, "put_litter_in_its_place_symbol"),
    (0x1F6AF, "do_not_litter_symbol"),
    (0x1F6B0, "potable_water_symbol"),
    (0x1F6B1, "non_potable_water_symbol"),
    (0x1F6B2, "bicycle"),
    (0x1F6B3, "no_bicycles"),
    (0x1F6B4, "bicyclist"),
    (0x1F6B5, "mountain_bicyclist"),
    (0x1F6B6, "pedestrian"),
    (0x1F6B7, "no_pedestrians"),
    (0x1F6B8, "children_crossing"),
    (0x1F6B9, "mens_symbol"),
    (0x1F6BA, "womens_symbol"),
    (0x1F6BB, "restroom"),
    (0x1F6BC, "baby_symbol"),
    (0x1F6BD, "toilet"),
    (0x1F6BE, "water_closet"),
    (0x1F6BF, "shower"),
    (0x1F6C0, "bath"),
    (0x1F6C1, "bathtub"),
    (0x1F6C2, "passport_control"),
    (0x1F6C3, "customs"),
    (0x1F6C4, "baggage_claim"),
    (0x1F6C5, "left_luggage"),
    (0x1F6C6, "triangle_with_rounded_corners"),
    (0x1F6C7, "prohibited_sign"),
    (0x1F6C8, "circled_information_source"),
    (0x1F6C9, "boys_symbol"),
    (0x1F6CA, "girls_symbol"),
    (0x1F6CB, "couch_and_lamp"),
    (0x1F6CC, "sleeping_accommodation"),
    (0x1F6CD, "shopping_bags"),
    (0x1F6CE, "bellhop_bell"),
    (0x1F6CF, "bed"),
    (0x1F6D0, "place_of_worship"),
    (0x1F6D1, "octagonal_sign"),
    (0x1F6D2, "shopping_trolley"),
    (0x1F6D3, "stupa"),
    (0x1F6D4, "pagoda"),
    (0x1F6D5, "hindu_temple"),
    (0x1F6D6, "hut"),
    (0x1F6D7, "elevator"),
    (0x1F6E0, "hammer_and_wrench"),
    (0x1F6E1, "shield"),
    (0x1F6E2, "oil_drum"),
    (0x1F6E3, "motorway"),
    (0x1F6E4, "railway_track"),
    (0x1F6E5, "motor_boat"),
    (0x1F6E6, "up_pointing_military_airplane"),
    (0x1F6E7, "up_pointing_airplane"),
    (0x1F6E8, "up_pointing_small_airplane"),
    (0x1F6E9, "small_airplane"),
    (0x1F6EA, "northeast_pointing_airplane"),
    (0x1F6EB, "airplane_departure"),
    (0x1F6EC, "airplane_arriving"),
    (0x1F6F0, "satellite"),
    (0x1F6F1, "oncoming_fire_engine"),
    (0x1F6F2, "diesel_locomotive"),
    (0x1F6F3, "passenger_ship"),
    (0x1F6F4, "scooter"),
    (0x1F6F5, "motor_scooter"),
    (0x1F6F6, "canoe"),
    (0x1F6F7, "sled"),
    (0x1F6F8, "flying_saucer"),
    (0x1F6F9, "skateboard"),
    (0x1F6FA, "auto_rickshaw"),
    (0x1F6FB, "pickup_truck"),
    (0x1F6FC, "roller_skate"),
    (0x1F780, "black_left_pointing_isosceles_right_triangle"),
    (0x1F781, "black_up_pointing_isosceles_right_triangle"),
    (0x1F782, "black_right_pointing_isosceles_right_triangle"),
    (0x1F783, "black_down_pointing_isosceles_right_triangle"),
    (0x1F784, "black_slightly_small_circle"),
    (0x1F785, "medium_bold_white_circle"),
    (0x1F786, "bold_white_circle"),
    (0x1F787, "heavy_white_circle"),
    (0x1F788, "very_heavy_white_circle"),
    (0x1F789, "extremely_heavy_white_circle"),
    (0x1F78A, "white_circle_containing_black_small_circle"),
    (0x1F78B, "round_target"),
    (0x1F78C, "black_tiny_square"),
    (0x1F78D, "black_slightly_small_square"),
    (0x1F78E, "light_white_square"),
    (0x1F78F, "medium_white_square"),
    (0x1F790, "bold_white_square"),
    (0x1F791, "heavy_white_square"),
    (0x1F792, "very_heavy_white_square"),
    (0x1F793, "extremely_heavy_white_square"),
    (0x1F794, "white_square_containing_black_very_small_square"),
    (0x1F795, "white_square_containing_black_medium_square"),
    (0x1F796, "square_target"),
    (0x1F797, "black_tiny_diamond"),
    (0x1F798, "black_very_small_diamond"),
    (0x1F799, "black_medium_small_diamond"),
    (0x1F79A, "white_diamond_containing_black_very_small_diamond"),
    (0x1F79B, "white_diamond_containing_black_medium_diamond"),
    (0x1F79C, "diamond_target"),
    (0x1F79D, "black_tiny_lozenge"),
    (0x1F79E, "black_very_small_lozenge"),
    (0x1F79F, "black_medium_small_lozenge"),
    (0x1F7A0, "white_lozenge_containing_black_small_lozenge"),
    (0x1F7A1, "thin_greek_cross"),
    (0x1F7A2, "light_greek_cross"),
    (0x1F7A3, "medium_greek_cross"),
    (0x1F7A4, "bold_greek_cross"),
    (0x1F7A5, "very_bold_greek_cross"),
    (0x1F7A6, "very_heavy_greek_cross"),
    (0x1F7A7, "extremely_heavy_greek_cross"),
    (0x1F7A8, "thin_saltire"),
    (0x1F7A9, "light_saltire"),
    (0x1F7AA, "medium_saltire"),
    (0x1F7AB, "bold_saltire"),
    (0x1F7AC, "heavy_saltire"),
    (0x1F7AD, "very_heavy_saltire"),
    (0x1F7AE, "extremely_heavy_saltire"),
    (0x1F7AF, "light_five_spoked_asterisk"),
    (0x1F7B0, "medium_five_spoked_asterisk"),
    (0x1F7B1, "bold_five_spoked_asterisk"),
    (0x1F7B2, "heavy_five_spoked_asterisk"),
    (0x1F7B3, "very_heavy_five_spoked_asterisk"),
    (0x1F7B4, "extremely_heavy_five_spoked_asterisk"),
    (0x1F7B5, "light_six_spoked_asterisk"),
    (0x1F7B6, "medium_six_spoked_asterisk"),
    (0x1F7B7, "bold_six_spoked_asterisk"),
    (0x1F7B8, "heavy_six_spoked_asterisk"),
    (0x1F7B9, "very_heavy_six_spoked_asterisk"),
    (0x1F7BA, "extremely_heavy_six_spoked_asterisk"),
    (0x1F7BB, "light_eight_spoked_asterisk"),
    (0x1F7BC, "medium_eight_spoked_asterisk"),
    (0x1F7BD, "bold_eight_spoked_asterisk"),
    (0x1F7BE, "heavy_eight_spoked_asterisk"),
    (0x1F7BF, "very_heavy_eight_spoked_asterisk"),
    (0x1F7C0, "light_three_pointed_black_star"),
    (0x1F7C1, "medium_three_pointed_black_star"),
    (0x1F7C2, "three_pointed_black_star"),
    (0x1F7C3, "medium_three_pointed_pinwheel_star"),
    (0x1F7C4, "light_four_pointed_black_star"),
    (0x1F7C5, "medium_four_pointed_black_star"),
    (0x1F7C6, "four_pointed_black_star"),
    (0x1F7C7, "medium_four_pointed_pinwheel_star"),
    (0x1F7C8, "reverse_light_four_pointed_pinwheel_star"),
    (0x1F7C9, "light_five_pointed_black_star"),
    (0x1F7CA, "heavy_five_pointed_black_star"),
    (0x1F7CB, "medium_six_pointed_black_star"),
    (0x1F7CC, "heavy_six_pointed_black_star"),
    (0x1F7CD, "six_pointed_pinwheel_star"),
    (0x1F7CE, "medium_eight_pointed_black_star"),
    (0x1F7CF, "heavy_eight_pointed_black_star"),
    (0x1F7D0, "very_heavy_eight_pointed_black_star"),
    (0x1F7D1, "heavy_eight_pointed_pinwheel_star"),
    (0x1F7D2, "light_twelve_pointed_black_star"),
    (0x1F7D3, "heavy_twelve_pointed_black_star"),
    (0x1F7D4, "heavy_twelve_pointed_pinwheel_star"),
    (0x1F7D5, "circled_triangle"),
    (0x1F7D6, "negative_circled_triangle"),
    (0x1F7D7, "circled_square"),
    (0x1F7D8, "negative_circled_square"),
    (0x1F7E0, "large_orange_circle"),
    (0x1F7E1, "large_yellow_circle"),
    (0x1F7E2, "large_green_circle"),
    (0x1F7E3, "large_purple_circle"),
    (0x1F7E4, "large_brown_circle"),
    (0x1F7E5, "large_red_square"),
    (0x1F7E6, "large_blue_square"),
    (0x1F7E7, "large_orange_square"),
    (0x1F7E8, "large_yellow_square"),
    (0x1F7E9, "large_green_square"),
    (0x1F7EA, "large_purple_square"),
    (0x1F7EB, "large_brown_square"),
    (0x1F900, "circled_cross_formee_with_four_dots"),
    (0x1F901, "circled_cross_formee_with_two_dots"),
    (0x1F902, "circled_cross_formee"),
    (0x1F903, "left_half_circle_with_four_dots"),
    (0x1F904, "left_half_circle_with_three_dots"),
    (0x1F905, "left_half_circle_with_two_dots"),
    (0x1F906, "left_half_circle_with_dot"),
    (0x1F907, "left_half_circle"),
    (0x1F908, "downward_facing_hook"),
    (0x1F909, "downward_facing_notched_hook"),
    (0x1F90A, "downward_facing_hook_with_dot"),
    (0x1F90B, "downward_facing_notched_hook_with_dot"),
    (0x1F90C, "pinched_fingers"),
    (0x1F90D, "white_heart"),
    (0x1F90E, "brown_heart"),
    (0x1F90F, "pinching_hand"),
    (0x1F910, "zipper_mouth_face"),
    (0x1F911, "money_mouth_face"),
    (0x1F912, "face_with_thermometer"),
    (0x1F913, "nerd_face"),
    (0x1F914, "thinking_face"),
    (0x1F915, "face_with_head_bandage"),
    (0x1F916, "robot_face"),
    (0x1F917, "hugging_face"),
    (0x1F918, "sign_of_the_horns"),
    (0x1F919, "call_me_hand"),
    (0x1F91A, "raised_back_of_hand"),
    (0x1F91B, "left_facing_fist"),
    (0x1F91C, "right_facing_fist"),
    (0x1F91D, "handshake"),
    (0x1F91E, "hand_with_index_and_middle_fingers_crossed"),
    (0x1F91F, "i_love_you_hand_sign"),
    (0x1F920, "face_with_cowboy_hat"),
    (0x1F921, "clown_face"),
    (0x1F922, "nauseated_face"),
    (0x1F923, "rolling_on_the_floor_laughing"),
    (0x1F924, "drooling_face"),
    (0x1F925, "lying_face"),
    (0x1F926, "face_palm"),
    (0x1F927, "sneezing_face"),
    (0x1F928, "face_with_one_eyebrow_raised"),
    (0x1F929, "grinning_face_with_star_eyes"),
    (0x1F92A, "grinning_face_with_one_large_and_one_small_eye"),
    (0x1F92B, "face_with_finger_covering_closed_lips"),
    (0x1F92C, "serious_face_with_symbols_covering_mouth"),
    (0x1F92D, "smiling_face_with_smiling_eyes_and_hand_covering_mouth"),
    (0x1F92E, "face_with_open_mouth_vomiting"),
    (0x1F92F, "shocked_face_with_exploding_head"),
    (0x1F930, "pregnant_woman"),
    (0x1F931, "breast_feeding"),
    (0x1F932, "palms_up_together"),
    (0x1F933, "selfie"),
    (0x1F934, "prince"),
    (0x1F935, "man_in_tuxedo"),
    (0x1F936, "mother_christmas"),
    (0x1F937, "shrug"),
    (0x1F938, "person_doing_cartwheel"),
    (0x1F939, "juggling"),
    (0x1F93A, "fencer"),
    (0x1F93B, "modern_pentathlon"),
    (0x1F93C, "wrestlers"),
    (0x1F93D, "water_polo"),
    (0x1F93E, "handball"),
    (0x1F93F, "diving_mask"),
    (0x1F940, "wilted_flower"),
    (0x1F941, "drum_with_drumsticks"),
    (0x1F942, "clinking_glasses"),
    (0x1F943, "tumbler_glass"),
    (0x1F944, "spoon"),
    (0x1F945, "goal_net"),
    (0x1F946, "rifle"),
    (0x1F947, "first_place_medal"),
    (0x1F948, "second_place_medal"),
    (0x1F949, "third_place_medal"),
    (0x1F94A, "boxing_glove"),
    (0x1F94B, "martial_arts_uniform"),
    (0x1F94C, "curling_stone"),
    (0x1F94D, "lacrosse_stick_and_ball"),
    (0x1F94E, "softball"),
    (0x1F94F, "flying_disc"),
    (0x1F950, "croissant"),
    (0x1F951, "avocado"),
    (0x1F952, "cucumber"),
    (0x1F953, "bacon"),
    (0x1F954, "potato"),
    (0x1F955, "carrot"),
    (0x1F956, "baguette_bread"),
    (0x1F957, "green_salad"),
    (0x1F958, "shallow_pan_of_food"),
    (0x1F959, "stuffed_flatbread"),
    (0x1F95A, "egg"),
    (0x1F95B, "glass_of_milk"),
    (0x1F95C, "peanuts"),
    (0x1F95D, "kiwifruit"),
    (0x1F95E, "pancakes"),
    (0x1F95F, "dumpling"),
    (0x1F960, "fortune_cookie"),
    (0x1F961, "takeout_box"),
    (0x1F962, "chopsticks"),
    (0x1F963, "bowl_with_spoon"),
    (0x1F964, "cup_with_straw"),
    (0x1F965, "coconut"),
    (0x1F966, "broccoli"),
    (0x1F967, "pie"),
    (0x1F968, "pretzel"),
    (0x1F969, "cut_of_meat"),
    (0x1F96A, "sandwich"),
    (0x1F96B, "canned_food"),
    (0x1F96C, "leafy_green"),
    (0x1F96D, "mango"),
    (0x1F96E, "moon_cake"),
    (0x1F96F, "bagel"),
    (0x1F970, "smiling_face_with_smiling_eyes_and_three_hearts"),
    (0x1F971, "yawning_face"),
    (0x1F972, "smiling_face_with_tear"),
    (0x1F973, "face_with_party_horn_and_party_hat"),
    (0x1F974, "face_with_uneven_eyes_and_wavy_mouth"),
    (0x1F975, "overheated_face"),
    (0x1F976, "freezing_face"),
    (0x1F977, "ninja"),
    (0x1F978, "disguised_face"),
    (0x1F97A, "face_with_pleading_eyes"),
    (0x1F97B, "sari"),
    (0x1F97C, "lab_coat"),
    (0x1F97D, "goggles"),
    (0x1F97E, "hiking_boot"),
    (0x1F97F, "flat_shoe"),
    (0x1F980, "crab"),
    (0x1F981, "lion_face"),
    (0x1F982, "scorpion"),
    (0x1F983, "turkey"),
    (0x1F984, "unicorn_face"),
    (0x1F985, "eagle"),
    (0x1F986, "duck"),
    (0x1F987, "bat"),
    (0x1F988, "shark"),
    (0x1F989, "owl"),
    (0x1F98A, "fox_face"),
    (0x1F98B, "butterfly"),
    (0x1F98C, "deer"),
    (0x1F98D, "gorilla"),
    (0x1F98E, "lizard"),
    (0x1F98F, "rhinoceros"),
    (0x1F990, "shrimp"),
    (0x1F991, "squid"),
    (0x1F992, "giraffe_face"),
    (0x1F993, "zebra_face"),
    (0x1F994, "hedgehog"),
    (0x1F995, "sauropod"),
    (0x1F996, "t_rex"),
    (0x1F997, "cricket"),
    (0x1F998, "kangaroo"),
    (0x1F999, "llama"),
    (0x1F99A, "peacock"),
    (0x1F99B, "hippopotamus"),
    (0x1F99C, "parrot"),
    (0x1F99D, "raccoon"),
    (0x1F99E, "lobster"),
    (0x1F99F, "mosquito"),
    (0x1F9A0, "microbe"),
    (0x1F9A1, "badger"),
    (0x1F9A2, "swan"),
    (0x1F9A3, "mammoth"),
    (0x1F9A4, "dodo"),
    (0x1F9A5, "sloth"),
    (0x1F9A6, "otter"),
    (0x1F9A7, "orangutan"),
    (0x1F9A8, "skunk"),
    (0x1F9A9, "flamingo"),
    (0x1F9AA, "oyster"),
    (0x1F9AB, "beaver"),
    (0x1F9AC, "bison"),
    (0x1F9AD, "seal"),
    (0x1F9AE, "guide_dog"),
    (0x1F9AF, "probing_cane"),
    (0x1F9B0, "emoji_component_red_hair"),
    (0x1F9B1, "emoji_component_curly_hair"),
    (0x1F9B2, "emoji_component_bald"),
    (0x1F9B3, "emoji_component_white_hair"),
    (0x1F9B4, "bone"),
    (0x1F9B5, "leg"),
    (0x1F9B6, "foot"),
    (0x1F9B7, "tooth"),
    (0x1F9B8, "superhero"),
    (0x1F9B9, "supervillain"),
    (0x1F9BA, "safety_vest"),
    (0x1F9BB, "ear_with_hearing_aid"),
    (0x1F9BC, "motorized_wheelchair"),
    (0x1F9BD, "manual_wheelchair"),
    (0x1F9BE, "mechanical_arm"),
    (0x1F9BF, "mechanical_leg"),
    (0x1F9C0, "cheese_wedge"),
    (0x1F9C1, "cupcake"),
    (0x1F9C2, "salt_shaker"),
    (0x1F9C3, "beverage_box"),
    (0x1F9C4, "garlic"),
    (0x1F9C5, "onion"),
    (0x1F9C6, "falafel"),
    (0x1F9C7, "waffle"),
    (0x1F9C8, "butter"),
    (0x1F9C9, "mate_drink"),
    (0x1F9CA, "ice_cube"),
    (0x1F9CB, "bubble_tea"),
    (0x1F9CD, "standing_person"),
    (0x1F9CE, "kneeling_person"),
    (0x1F9CF, "deaf_person"),
    (0x1F9D0, "face_with_monocle"),
    (0x1F9D1, "adult"),
    (0x1F9D2, "child"),
    (0x1F9D3, "older_adult"),
    (0x1F9D4, "bearded_person"),
    (0x1F9D5, "person_with_headscarf"),
    (0x1F9D6, "person_in_steamy_room"),
    (0x1F9D7, "person_climbing"),
    (0x1F9D8, "person_in_lotus_position"),
    (0x1F9D9, "mage"),
    (0x1F9DA, "fairy"),
    (0x1F9DB, "vampire"),
    (0x1F9DC, "merperson"),
    (0x1F9DD, "elf"),
    (0x1F9DE, "genie"),
    (0x1F9DF, "zombie"),
    (0x1F9E0, "brain"),
    (0x1F9E1, "orange_heart"),
    (0x1F9E2, "billed_cap"),
    (0x1F9E3, "scarf"),
    (0x1F9E4, "gloves"),
    (0x1F9E5, "coat"),
    (0x1F9E6, "socks"),
    (0x1F9E7, "red_gift_envelope"),
    (0x1F9E8, "firecracker"),
    (0x1F9E9, "jigsaw_puzzle_piece"),
    (0x1F9EA, "test_tube"),
    (0x1F9EB, "petri_dish"),
    (0x1F9EC, "dna_double_helix"),
    (0x1F9ED, "compass"),
    (0x1F9EE, "abacus"),
    (0x1F9EF, "fire_extinguisher"),
    (0x1F9F0, "toolbox"),
    (0x1F9F1, "brick"),
    (0x1F9F2, "magnet"),
    (0x1F9F3, "luggage"),
    (0x1F9F4, "lotion_bottle"),
    (0x1F9F5, "spool_of_thread"),
    (0x1F9F6, "ball_of_yarn"),
    (0x1F9F7, "safety_pin"),
    (0x1F9F8, "teddy_bear"),
    (0x1F9F9, "broom"),
    (0x1F9FA, "basket"),
    (0x1F9FB, "roll_of_paper"),
    (0x1F9FC, "bar_of_soap"),
    (0x1F9FD, "sponge"),
    (0x1F9FE, "receipt"),
    (0x1F9FF, "nazar_amulet"),
    (0x1FA00, "neutral_chess_king"),
    (0x1FA01, "neutral_chess_queen"),
    (0x1FA02, "neutral_chess_rook"),
    (0x1FA03, "neutral_chess_bishop"),
    (0x1FA04, "neutral_chess_knight"),
    (0x1FA05, "neutral_chess_pawn"),
    (0x1FA06, "white_chess_knight_rotated_forty_five_degrees"),
    (0x1FA07, "black_chess_knight_rotated_forty_five_degrees"),
    (0x1FA08, "neutral_chess_knight_rotated_forty_five_degrees"),
    (0x1FA09, "white_chess_king_rotated_ninety_degrees"),
    (0x1FA0A, "white_chess_queen_rotated_ninety_degrees"),
    (0x1FA0B, "white_chess_rook_rotated_ninety_degrees"),
    (0x1FA0C, "white_chess_bishop_rotated_ninety_degrees"),
    (0x1FA0D, "white_chess_knight_rotated_ninety_degrees"),
    (0x1FA0E, "white_chess_pawn_rotated_ninety_degrees"),
    (0x1FA0F, "black_chess_king_rotated_ninety_degrees"),
    (0x1FA10, "black_chess_queen_rotated_ninety_degrees"),
    (0x1FA11, "black_chess_rook_rotated_ninety_degrees"),
    (0x1FA12, "black_chess_bishop_rotated_ninety_degrees"),
    (0x1FA13, "black_chess_knight_rotated_ninety_degrees"),
    (0x1FA14, "black_chess_pawn_rotated_ninety_degrees"),
    (0x1FA15, "neutral_chess_king_rotated_ninety_degrees"),
    (0x1FA16, "neutral_chess_queen_rotated_ninety_degrees"),
    (0x1FA17, "neutral_chess_rook_rotated_ninety_degrees"),
    (0x1FA18, "neutral_chess_bishop_rotated_ninety_degrees"),
    (0x1FA19, "neutral_chess_knight_rotated_ninety_degrees"),
    (0x1FA1A, "neutral_chess_pawn_rotated_ninety_degrees"),
    (0x1FA1B, "white_chess_knight_rotated_one_hundred_thirty_five_degrees"),
    (0x1FA1C, "black_chess_knight_rotated_one_hundred_thirty_five_degrees"),
    (0x1FA1D, "neutral_chess_knight_rotated_one_hundred_thirty_five_degrees"),
    (0x1FA1E, "white_chess_turned_king"),
    (0x1FA1F, "white_chess_turned_queen"),
    (0x1FA20, "white_chess_turned_rook"),
    (0x1FA21, "white_chess_turned_bishop"),
    (0x1FA22, "white_chess_turned_knight"),
    (0x1FA23, "white_chess_turned_pawn"),
    (0x1FA24, "black_chess_turned_king"),
    (0x1FA25, "black_chess_turned_queen"),
    (0x1FA26, "black_chess_turned_rook"),
    (0x1FA27, "black_chess_turned_bishop"),
    (0x1FA28, "black_chess_turned_knight"),
    (0x1FA29, "black_chess_turned_pawn"),
    (0x1FA2A, "neutral_chess_turned_king"),
    (0x1FA2B, "neutral_chess_turned_queen"),
    (0x1FA2C, "neutral_chess_turned_rook"),
    (0x1FA2D, "neutral_chess_turned_bishop"),
    (0x1FA2E, "neutral_chess_turned_knight"),
    (0x1FA2F, "neutral_chess_turned_pawn"),
    (0x1FA30, "white_chess_knight_rotated_two_hundred_twenty_five_degrees"),
    (0x1FA31, "black_chess_knight_rotated_two_hundred_twenty_five_degrees"),
    (0x1FA32, "neutral_chess_knight_rotated_two_hundred_twenty_five_degrees"),
    (0x1FA33, "white_chess_king_rotated_two_hundred_seventy_degrees"),
    (0x1FA34, "white_chess_queen_rotated_two_hundred_seventy_degrees"),
    (0x1FA35, "white_chess_rook_rotated_two_hundred_seventy_degrees"),
    (0x1FA36, "white_chess_bishop_rotated_two_hundred_seventy_degrees"),
    (0x1FA37, "white_chess_knight_rotated_two_hundred_seventy_degrees"),
    (0x1FA38, "white_chess_pawn_rotated_two_hundred_seventy_degrees"),
    (0x1FA39, "black_chess_king_rotated_two_hundred_seventy_degrees"),
    (0x1FA3A, "black_chess_queen_rotated_two_hundred_seventy_degrees"),
    (0x1FA3B, "black_chess_rook_rotated_two_hundred_seventy_degrees"),
    (0x1FA3C, "black_chess_bishop_rotated_two_hundred_seventy_degrees"),
    (0x1FA3D, "black_chess_knight_rotated_two_hundred_seventy_degrees"),
    (0x1FA3E, "black_chess_pawn_rotated_two_hundred_seventy_degrees"),
    (0x1FA3F, "neutral_chess_king_rotated_two_hundred_seventy_degrees"),
    (0x1FA40, "neutral_chess_queen_rotated_two_hundred_seventy_degrees"),
    (0x1FA41, "neutral_chess_rook_rotated_two_hundred_seventy_degrees"),
    (0x1FA42, "neutral_chess_bishop_rotated_two_hundred_seventy_degrees"),
    (0x1FA43, "neutral_chess_knight_rotated_two_hundred_seventy_degrees"),
    (0x1FA44, "neutral_chess_pawn_rotated_two_hundred_seventy_degrees"),
    (0x1FA45, "white_chess_knight_rotated_three_hundred_fifteen_degrees"),
    (0x1FA46, "black_chess_knight_rotated_three_hundred_fifteen_degrees"),
    (0x1FA47, "neutral_chess_knight_rotated_three_hundred_fifteen_degrees"),
    (0x1FA48, "white_chess_equihopper"),
    (0x1FA49, "black_chess_equihopper"),
    (0x1FA4A, "neutral_chess_equihopper"),
    (0x1FA4B, "white_chess_equihopper_rotated_ninety_degrees"),
    (0x1FA4C, "black_chess_equihopper_rotated_ninety_degrees"),
    (0x1FA4D, "neutral_chess_equihopper_rotated_ninety_degrees"),
    (0x1FA4E, "white_chess_knight_queen"),
    (0x1FA4F, "white_chess_knight_rook"),
    (0x1FA50, "white_chess_knight_bishop"),
    (0x1FA51, "black_chess_knight_queen"),
    (0x1FA52, "black_chess_knight_rook"),
    (0x1FA53, "black_chess_knight_bishop"),
    (0x1FA60, "xiangqi_red_general"),
    (0x1FA61, "xiangqi_red_mandarin"),
    (0x1FA62, "xiangqi_red_elephant"),
    (0x1FA63, "xiangqi_red_horse"),
    (0x1FA64, "xiangqi_red_chariot"),
    (0x1FA65, "xiangqi_red_cannon"),
    (0x1FA66, "xiangqi_red_soldier"),
    (0x1FA67, "xiangqi_black_general"),
    (0x1FA68, "xiangqi_black_mandarin"),
    (0x1FA69, "xiangqi_black_elephant"),
    (0x1FA6A, "xiangqi_black_horse"),
    (0x1FA6B, "xiangqi_black_chariot"),
    (0x1FA6C, "xiangqi_black_cannon"),
    (0x1FA6D, "xiangqi_black_soldier"),
    (0x1FA70, "ballet_shoes"),
    (0x1FA71, "one_piece_swimsuit"),
    (0x1FA72, "briefs"),
    (0x1FA73, "shorts"),
    (0x1FA74, "thong_sandal"),
    (0x1FA78, "drop_of_blood"),
    (0x1FA79, "adhesive_bandage"),
    (0x1FA7A, "stethoscope"),
    (0x1FA80, "yo_yo"),
    (0x1FA81, "kite"),
    (0x1FA82, "parachute"),
    (0x1FA83, "boomerang"),
    (0x1FA84, "magic_wand"),
    (0x1FA85, "pinata"),
    (0x1FA86, "nesting_dolls"),
    (0x1FA90, "ringed_planet"),
    (0x1FA91, "chair"),
    (0x1FA92, "razor"),
    (0x1FA93, "axe"),
    (0x1FA94, "diya_lamp"),
    (0x1FA95, "banjo"),
    (0x1FA96, "military_helmet"),
    (0x1FA97, "accordion"),
    (0x1FA98, "long_drum"),
    (0x1FA99, "coin"),
    (0x1FA9A, "carpentry_saw"),
    (0x1FA9B, "screwdriver"),
    (0x1FA9C, "ladder"),
    (0x1FA9D, "hook"),
    (0x1FA9E, "mirror"),
    (0x1FA9F, "window"),
    (0x1FAA0, "plunger"),
    (0x1FAA1, "sewing_needle"),
    (0x1FAA2, "knot"),
    (0x1FAA3, "bucket"),
    (0x1FAA4, "mouse_trap"),
    (0x1FAA5, "toothbrush"),
    (0x1FAA6, "headstone"),
    (0x1FAA7, "placard"),
    (0x1FAA8, "rock"),
    (0x1FAB0, "fly"),
    (0x1FAB1, "worm"),
    (0x1FAB2, "beetle"),
    (0x1FAB3, "cockroach"),
    (0x1FAB4, "potted_plant"),
    (0x1FAB5, "wood"),
    (0x1FAB6, "feather"),
    (0x1FAC0, "anatomical_heart"),
    (0x1FAC1, "lungs"),
    (0x1FAC2, "people_hugging"),
    (0x1FAD0, "blueberries"),
    (0x1FAD1, "bell_pepper"),
    (0x1FAD2, "olive"),
    (0x1FAD3, "flatbread"),
    (0x1FAD4, "tamale"),
    (0x1FAD5, "fondue"),
    (0x1FAD6, "teapot"),
];
