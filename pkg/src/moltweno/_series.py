"""Polynomial tables for small-argument evaluation of the exponential-kernel
quadrature coefficients (Taylor in nu, generated symbolically, exact to
well below 1e-15 relative for nu <= 1).  Row r, column m holds the nu**m
coefficient of entry r."""
import numpy as np

C2_SMALL_SERIES_r0 = np.array([
    [0.0, 0.4166666666666667, -0.2916666666666667, 0.1125, -0.030555555555555555, 0.006448412698412698, -0.0011160714285714285, 0.00016396604938271605, -2.0943562610229278e-05, 2.3674242424242424e-06, -2.400827053604831e-07, 2.208118527562972e-08, -1.8582607868322154e-09, 1.4414903634480354e-10, -1.0371465811280626e-11, 6.958356704505163e-13, -4.3733779512041436e-14, 2.585389785063352e-15, -1.4427214857825698e-16],
    [0.0, 0.6666666666666666, -0.25, 0.06666666666666667, -0.013888888888888888, 0.002380952380952381, -0.00034722222222222224, 4.409171075837743e-05, -4.96031746031746e-06, 5.010421677088344e-07, -4.592886537330982e-08, 3.854170520837187e-09, -2.9823938554097286e-10, 2.1412058449095486e-11, -1.4338431997162156e-12, 8.996663213905666e-14, -5.310530369319317e-15, 2.9594286887847587e-16, -1.5619206968586227e-17],
    [0.0, -0.08333333333333333, 0.041666666666666664, -0.0125, 0.002777777777777778, -0.000496031746031746, 7.440476190476191e-05, -9.645061728395062e-06, 1.1022927689594355e-06, -1.1273448773448773e-07, 1.043837849393405e-08, -8.832474110251888e-10, 6.882447358637835e-11, -4.9706564256828805e-12, 3.3456341326711696e-13, -2.1085929407591406e-14, 1.249536557486898e-15, -6.987539959630681e-17, 3.6992858609809485e-18],
])

C2_SMALL_SERIES_r1 = np.array([
    [0.0, -0.08333333333333333, 0.041666666666666664, -0.0125, 0.002777777777777778, -0.000496031746031746, 7.440476190476191e-05, -9.645061728395062e-06, 1.1022927689594355e-06, -1.1273448773448773e-07, 1.043837849393405e-08, -8.832474110251888e-10, 6.882447358637835e-11, -4.9706564256828805e-12, 3.3456341326711696e-13, -2.1085929407591406e-14, 1.249536557486898e-15, -6.987539959630681e-17, 3.6992858609809485e-18],
    [0.0, 0.6666666666666666, -0.4166666666666667, 0.15, -0.03888888888888889, 0.007936507936507936, -0.0013392857142857143, 0.00019290123456790122, -2.4250440917107583e-05, 2.7056277056277056e-06, -2.713978408422853e-07, 2.4730927508705285e-08, -2.0647342075913502e-09, 1.5906100562185218e-10, -1.1375156051081977e-11, 7.590934586732906e-13, -4.748238918450213e-14, 2.7950159838522722e-15, -1.5537000616119982e-16],
    [0.0, 0.4166666666666667, -0.125, 0.029166666666666667, -0.005555555555555556, 0.0008928571428571428, -0.0001240079365079365, 1.515652557319224e-05, -1.6534391534391535e-06, 1.6283870450537117e-07, -1.4613729891507668e-08, 1.2044282877616211e-09, -9.17659647818378e-11, 6.500089172046844e-12, -4.301529599148647e-13, 2.6708843916282446e-14, -1.5619206968586226e-15, 8.631667008955546e-17, -4.521349385643381e-18],
])

C2_BIG_SERIES = np.array([
    [0.0, -0.041666666666666664, 0.022222222222222223, -0.006944444444444444, 0.0015873015873015873, -0.00028935185185185184, 4.409171075837743e-05, -5.787037037037037e-06, 6.680562236117792e-07, -6.889329805996472e-08, 6.423617534728646e-09, -5.467722068251169e-10, 4.282411689819097e-11, -3.1066602660518006e-12, 2.099221416577989e-13, -1.3276325923298292e-14, 7.891809836759357e-16, -4.425441974432764e-17, 2.348752927606951e-18],
    [0.0, 0.5416666666666666, -0.35833333333333334, 0.13333333333333333, -0.03531746031746032, 0.007316468253968254, -0.0012483465608465608, 0.00018132716049382717, -2.2947731281064616e-05, 2.5741041366041367e-06, -2.593535579646691e-07, 2.3721501896105072e-08, -1.9867331375267884e-09, 1.5346901714295895e-10, -1.1001232236254022e-11, 7.356646482204113e-13, -4.610132246306924e-14, 2.7181530442963345e-15, -1.5131840736107785e-16],
    [0.0, 0.5416666666666666, -0.18333333333333332, 0.04583333333333333, -0.009126984126984128, 0.0015128968253968254, -0.00021494708994708995, 2.6730599647266314e-05, -2.956148789482123e-06, 2.943622735289402e-07, -2.665801276912388e-08, 2.2138539003618367e-09, -1.6976703484639993e-10, 1.2092077650940085e-11, -8.040767747428189e-13, 5.013765436916179e-14, -2.94298741829151e-15, 1.6317960964549295e-16, -8.572948185765372e-18],
    [0.0, -0.041666666666666664, 0.019444444444444445, -0.005555555555555556, 0.0011904761904761906, -0.00020667989417989417, 3.031305114638448e-05, -3.858024691358025e-06, 4.342365453476565e-07, -4.384118967452301e-08, 4.014760959205403e-09, -3.3647520420007194e-10, 2.6000356688187376e-11, -1.8639961596310803e-12, 1.246412716093181e-13, -7.809603484293113e-15, 4.603555738109624e-16, -2.562097985197916e-17, 1.350532933373997e-18],
])

D2_SERIES = np.array([
    [0.5, 0.016666666666666666, 0.0, -0.00011904761904761905, 0.0, 1.3227513227513228e-06, 0.0, -1.5890194461623034e-08, 0.0, 1.9491090919662347e-10, 0.0, -2.406016200422852e-12, 0.0, 2.9760961911599945e-14, 0.0, -3.683729478577683e-16, 0.0, 4.560644042457769e-18, 0.0],
    [0.5, -0.016666666666666666, 0.0, 0.00011904761904761905, 0.0, -1.3227513227513228e-06, 0.0, 1.5890194461623034e-08, 0.0, -1.9491090919662347e-10, 0.0, 2.406016200422852e-12, 0.0, -2.9760961911599945e-14, 0.0, 3.683729478577683e-16, 0.0, -4.560644042457769e-18, 0.0],
])

C3_SMALL_SERIES_r0 = np.array([
    [0.0, 0.375, -0.26944444444444443, 0.10555555555555556, -0.02896825396825397, 0.006159060846560847, -0.0010719797178130512, 0.00015817901234567902, -2.0275506386617498e-05, 2.2985309443642776e-06, -2.3365908782575449e-07, 2.1534413068804604e-08, -1.8154366699340244e-09, 1.4104237607875174e-10, -1.0161543669622827e-11, 6.825593445272181e-13, -4.29445985283655e-14, 2.541135365319024e-15, -1.4192339565065004e-16],
    [0.0, 0.7916666666666666, -0.31666666666666665, 0.0875, -0.01865079365079365, 0.0032490079365079367, -0.0004794973544973545, 6.145282186948854e-05, -6.964486131152798e-06, 7.077220618887286e-07, -6.519971797749576e-08, 5.494487141312538e-09, -4.2671173623554577e-10, 3.073203924725089e-11, -2.0636096246896123e-12, 1.2979560990895155e-13, -7.678073320347124e-15, 4.287061281114588e-16, -2.266546575140708e-17],
    [0.0, -0.20833333333333334, 0.10833333333333334, -0.03333333333333333, 0.00753968253968254, -0.0013640873015873015, 0.00020667989417989417, -2.7006172839506174e-05, 3.106461439794773e-06, -3.194143819143819e-07, 2.9709231098119988e-08, -2.5235640315005394e-09, 1.9729682428095126e-10, -1.4290637223838282e-11, 9.643298382405136e-13, -6.091490717748628e-14, 3.617079508514705e-15, -2.0263865882928974e-16, 1.0745544643801802e-17],
    [0.0, 0.041666666666666664, -0.022222222222222223, 0.006944444444444444, -0.0015873015873015873, 0.00028935185185185184, -4.409171075837743e-05, 5.787037037037037e-06, -6.680562236117792e-07, 6.889329805996472e-08, -6.423617534728646e-09, 5.467722068251169e-10, -4.282411689819097e-11, 3.1066602660518006e-12, -2.099221416577989e-13, 1.3276325923298292e-14, -7.891809836759357e-16, 4.425441974432764e-17, -2.348752927606951e-18],
])

C3_SMALL_SERIES_r1 = np.array([
    [0.0, -0.041666666666666664, 0.022222222222222223, -0.006944444444444444, 0.0015873015873015873, -0.00028935185185185184, 4.409171075837743e-05, -5.787037037037037e-06, 6.680562236117792e-07, -6.889329805996472e-08, 6.423617534728646e-09, -5.467722068251169e-10, 4.282411689819097e-11, -3.1066602660518006e-12, 2.099221416577989e-13, -1.3276325923298292e-14, 7.891809836759357e-16, -4.425441974432764e-17, 2.348752927606951e-18],
    [0.0, 0.5416666666666666, -0.35833333333333334, 0.13333333333333333, -0.03531746031746032, 0.007316468253968254, -0.0012483465608465608, 0.00018132716049382717, -2.2947731281064616e-05, 2.5741041366041367e-06, -2.593535579646691e-07, 2.3721501896105072e-08, -1.9867331375267884e-09, 1.5346901714295895e-10, -1.1001232236254022e-11, 7.356646482204113e-13, -4.610132246306924e-14, 2.7181530442963345e-15, -1.5131840736107785e-16],
    [0.0, 0.5416666666666666, -0.18333333333333332, 0.04583333333333333, -0.009126984126984128, 0.0015128968253968254, -0.00021494708994708995, 2.6730599647266314e-05, -2.956148789482123e-06, 2.943622735289402e-07, -2.665801276912388e-08, 2.2138539003618367e-09, -1.6976703484639993e-10, 1.2092077650940085e-11, -8.040767747428189e-13, 5.013765436916179e-14, -2.94298741829151e-15, 1.6317960964549295e-16, -8.572948185765372e-18],
    [0.0, -0.041666666666666664, 0.019444444444444445, -0.005555555555555556, 0.0011904761904761906, -0.00020667989417989417, 3.031305114638448e-05, -3.858024691358025e-06, 4.342365453476565e-07, -4.384118967452301e-08, 4.014760959205403e-09, -3.3647520420007194e-10, 2.6000356688187376e-11, -1.8639961596310803e-12, 1.246412716093181e-13, -7.809603484293113e-15, 4.603555738109624e-16, -2.562097985197916e-17, 1.350532933373997e-18],
])

C3_SMALL_SERIES_r2 = np.array([
    [0.0, 0.041666666666666664, -0.019444444444444445, 0.005555555555555556, -0.0011904761904761906, 0.00020667989417989417, -3.031305114638448e-05, 3.858024691358025e-06, -4.342365453476565e-07, 4.384118967452301e-08, -4.014760959205403e-09, 3.3647520420007194e-10, -2.6000356688187376e-11, 1.8639961596310803e-12, -1.246412716093181e-13, 7.809603484293113e-15, -4.603555738109624e-16, 2.562097985197916e-17, -1.350532933373997e-18],
    [0.0, -0.20833333333333334, 0.1, -0.029166666666666667, 0.006349206349206349, -0.0011160714285714285, 0.00016534391534391533, -2.1219135802469135e-05, 2.405002405002405e-06, -2.442580567580568e-07, 2.248266137155026e-08, -1.8926730236254045e-09, 1.4682554365094047e-10, -1.0562644904576122e-11, 7.084872280950712e-13, -4.451473986047075e-14, 2.6306032789197855e-15, -1.467383391522443e-16, 7.75088466110294e-18],
    [0.0, 0.7916666666666666, -0.475, 0.16666666666666666, -0.04246031746031746, 0.00855654761904762, -0.0014302248677248678, 0.0002044753086419753, -2.5553150553150554e-05, 2.8371512746512745e-06, -2.834421237199015e-07, 2.5740353121305502e-08, -2.1427352776559125e-09, 1.6465299410074543e-10, -1.174907986590993e-11, 7.8252226912617e-13, -4.8863455905935016e-14, 2.8718789234082095e-15, -1.5942160496132182e-16],
    [0.0, 0.375, -0.10555555555555556, 0.02361111111111111, -0.004365079365079365, 0.0006861772486772487, -9.369488536155203e-05, 1.1298500881834214e-05, -1.219202608091497e-06, 1.1899751483084816e-07, -1.0598968932302266e-08, 8.679530835615491e-10, -6.576560809365042e-11, 4.636093012415764e-12, -3.055116883055466e-13, 1.8899240431989333e-14, -1.1015651230476601e-15, 6.06956902375763e-17, -3.1708164522693844e-18],
])

C3_BIG_SERIES = np.array([
    [0.0, 0.007638888888888889, -0.003968253968253968, 0.0012152777777777778, -0.00027336860670194006, 4.9189814814814815e-05, -7.415424082090749e-06, 9.645061728395062e-07, -1.1048622159733271e-07, 1.131818468127992e-08, -1.0491908640056789e-09, 8.885048360908149e-11, -6.9274306747073635e-12, 5.005174873083457e-13, -3.369802800296245e-14, 2.1242121477277267e-15, -1.258931569197326e-16, 7.04047586841576e-18, -3.727368776419727e-19],
    [0.0, -0.06458333333333334, 0.03442460317460318, -0.010739087301587302, 0.002449845679012346, -0.0004457396384479718, 6.780353134519801e-05, -8.885147774036664e-06, 1.0242458159124825e-06, -1.0549071188952142e-07, 9.82469360445551e-09, -8.35404842927991e-10, 6.53691926207877e-11, -4.738164529955475e-12, 3.1991835157525574e-13, -2.021865238907254e-14, 1.2010739554139414e-15, -6.731178915657217e-17, 3.570533816851506e-18],
    [0.0, 0.5569444444444445, -0.3674603174603175, 0.13635912698412697, -0.03603395061728395, 0.007450121252204586, -0.0012690396023729356, 0.0001840745417134306, -2.32676274342941e-05, 2.607311945109564e-06, -2.6246595360351974e-07, 2.398752760442575e-08, -2.0076391336701015e-09, 1.5498985932549017e-10, -1.1104236795894225e-11, 7.42191832606231e-13, -4.648996278082394e-14, 2.739977763261155e-15, -1.5247816214163634e-16],
    [0.0, 0.5569444444444445, -0.18948412698412698, 0.047371031746031744, -0.009419091710758377, 0.001558366402116402, -0.0002209846480679814, 2.743205868205868e-05, -3.0287356676245566e-06, 3.0114148417719844e-07, -2.7235373630876275e-08, 2.2590677559262216e-09, -1.730451940049668e-10, 1.2313401813684952e-11, -8.180600752973269e-13, 5.096793852907084e-14, -2.9894927262581277e-15, 1.65644910540341e-16, -8.697000403137498e-18],
    [0.0, -0.06458333333333334, 0.03015873015873016, -0.008606150793650794, 0.0018408289241622574, -0.0003189759700176367, 4.669713003046336e-05, -5.933174335952114e-06, 6.667715001048334e-07, -6.722430457549505e-08, 6.148319640383132e-09, -5.147019139247975e-10, 3.97315139184109e-11, -2.8457414136415674e-12, 1.901268519839275e-13, -1.1903479837112029e-14, 7.011810406549286e-16, -3.8998640229237467e-17, 2.054462541025369e-18],
    [0.0, 0.007638888888888889, -0.0036706349206349206, 0.0010664682539682539, -0.00023093033509700176, 4.037147266313933e-05, -5.949875741542408e-06, 7.599139543583988e-07, -8.575529408862742e-08, 8.675324895562991e-09, -7.95687386295852e-10, 6.676929833345177e-11, -5.164646976232722e-12, 3.7056568532970823e-13, -2.4795902094392965e-14, 1.5545221251366608e-15, -9.167965594092467e-17, 5.1045340614185165e-18, -2.6916662132333613e-19],
])

D3_SERIES = np.array([
    [0.18333333333333332, 0.009682539682539683, 0.0002037037037037037, -6.331569664902998e-05, -3.093138489963887e-06, 6.297339736493175e-07, 4.5791288207513955e-08, -6.5925288407861686e-09, -6.499934324183366e-10, 6.803572320961718e-11, 8.884116547311423e-12, -6.731832782774334e-13, -1.1760574017924747e-13, 6.20500780840164e-15, 1.5147288108349163e-15, -5.0354071354478755e-17, -1.9040773011692112e-17, 3.005723408986393e-19, 2.3404323867166773e-19],
    [0.6333333333333333, 0.0, -0.0004074074074074074, 0.0, 6.186276979927774e-06, 0.0, -9.158257641502791e-08, 0.0, 1.2999868648366732e-09, 0.0, -1.7768233094622846e-11, 0.0, 2.3521148035849495e-13, 0.0, -3.0294576216698325e-15, 0.0, 3.8081546023384223e-17, 0.0, -4.680864773433355e-19],
    [0.18333333333333332, -0.009682539682539683, 0.0002037037037037037, 6.331569664902998e-05, -3.093138489963887e-06, -6.297339736493175e-07, 4.5791288207513955e-08, 6.5925288407861686e-09, -6.499934324183366e-10, -6.803572320961718e-11, 8.884116547311423e-12, 6.731832782774334e-13, -1.1760574017924747e-13, -6.20500780840164e-15, 1.5147288108349163e-15, 5.0354071354478755e-17, -1.9040773011692112e-17, -3.005723408986393e-19, 2.3404323867166773e-19],
])
